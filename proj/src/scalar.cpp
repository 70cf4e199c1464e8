#include "wtoric/scalar.hpp"

#include <cmath>
#include <ostream>

namespace wtoric {

int sign_of(const Rational& r) {
  if (r.is_zero()) return 0;
  return r < 0 ? -1 : 1;
}

bool is_squarefree(std::int64_t d) {
  if (d < 1) return false;
  for (std::int64_t p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw Error("cannot parse rational: '" + s + "'");
  }
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 0) {
    // sqrt(0) = 0: the irrational part is dead weight.
    b_ = 0;
    d_ = 1;
  }
  if (d_ < 1 || !is_squarefree(d_)) {
    throw Error("discriminant must be a squarefree positive integer, got " + std::to_string(d_));
  }
  normalize();
}

void Scalar::normalize() {
  if (d_ == 1 && !b_.is_zero()) {
    a_ += b_;  // sqrt(1) = 1
    b_ = 0;
  }
  if (b_.is_zero()) d_ = 1;
}

std::int64_t Scalar::common_disc(const Scalar& x, const Scalar& y) {
  if (x.d_ == y.d_) return x.d_;
  if (x.b_.is_zero()) return y.d_;
  if (y.b_.is_zero()) return x.d_;
  throw Error("mixed quadratic discriminants " + std::to_string(x.d_) + " and " + std::to_string(y.d_));
}

bool Scalar::is_integer() const {
  return b_.is_zero() && denominator(a_) == 1;
}

int Scalar::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 against b^2 d, exactly.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) {
    // Would force sqrt(d) rational, impossible for squarefree d > 1.
    throw Error("sign(): non-normalized quadratic element");
  }
  return (lhs > rhs) ? sa : -sa;
}

Scalar Scalar::conjugate() const {
  Scalar r(*this);
  r.b_ = -r.b_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (b_.is_zero()) {
    Scalar r;
    r.a_ = Rational(1) / a_;
    return r;
  }
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  if (norm.is_zero()) throw Error("inverse(): zero field norm for nonzero element");
  Scalar r;
  r.a_ = a_ / norm;
  r.b_ = -b_ / norm;
  r.d_ = d_;
  r.normalize();
  return r;
}

double Scalar::to_double() const {
  double v = a_.convert_to<double>();
  if (!b_.is_zero()) v += b_.convert_to<double>() * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + (sign_of(b_) >= 0 ? "+" : "") + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = common_disc(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = common_disc(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ *= o.a_;
    d_ = 1;
    return *this;
  }
  const std::int64_t d = common_disc(*this, o);
  Rational na = a_ * o.a_ + b_ * o.b_ * d;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  d_ = d;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("division by zero");
  if (b_.is_zero() && o.b_.is_zero()) {
    a_ /= o.a_;
    d_ = 1;
    return *this;
  }
  *this *= o.inverse();
  return *this;
}

bool operator==(const Scalar& l, const Scalar& r) {
  if (l.b_.is_zero() != r.b_.is_zero()) return false;
  if (!l.b_.is_zero() && l.d_ != r.d_) return false;
  return l.a_ == r.a_ && l.b_ == r.b_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.str();
}

Scalar abs(const Scalar& x) {
  return x.sign() < 0 ? -x : x;
}

} // namespace wtoric
