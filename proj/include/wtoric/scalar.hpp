#ifndef WTORIC_SCALAR_HPP
#define WTORIC_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace wtoric {

using Rational = boost::multiprecision::mpq_rational;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

int sign_of(const Rational& r);
bool is_squarefree(std::int64_t d);
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)), with d a
// squarefree positive integer. d == 1 encodes the pure rational case and
// forces b == 0. One instance of the engine works over a single d; mixing
// two genuinely irrational discriminants raises an Error.
class Scalar {
public:
  Scalar() : a_(0), b_(0), d_(1) {}
  Scalar(int v) : a_(v), b_(0), d_(1) {}
  Scalar(long v) : a_(v), b_(0), d_(1) {}
  Scalar(long long v) : a_(static_cast<long>(v)), b_(0), d_(1) {}
  Scalar(const Rational& a) : a_(a), b_(0), d_(1) {}
  Scalar(Rational a, Rational b, std::int64_t d);

  static Scalar sqrt_of(std::int64_t d) { return Scalar(Rational(0), Rational(1), d); }

  const Rational& rat_part() const { return a_; }
  const Rational& irr_part() const { return b_; }
  std::int64_t disc() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }
  bool is_integer() const;
  int sign() const;
  Scalar conjugate() const;
  Scalar inverse() const;
  double to_double() const;
  std::string str() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar l, const Scalar& r) { l += r; return l; }
  friend Scalar operator-(Scalar l, const Scalar& r) { l -= r; return l; }
  friend Scalar operator*(Scalar l, const Scalar& r) { l *= r; return l; }
  friend Scalar operator/(Scalar l, const Scalar& r) { l /= r; return l; }

  friend bool operator==(const Scalar& l, const Scalar& r);
  friend bool operator!=(const Scalar& l, const Scalar& r) { return !(l == r); }
  friend bool operator<(const Scalar& l, const Scalar& r) { return (l - r).sign() < 0; }
  friend bool operator>(const Scalar& l, const Scalar& r) { return (l - r).sign() > 0; }
  friend bool operator<=(const Scalar& l, const Scalar& r) { return (l - r).sign() <= 0; }
  friend bool operator>=(const Scalar& l, const Scalar& r) { return (l - r).sign() >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& x);

private:
  void normalize();
  // Discriminant the two operands live in; throws on a genuine mismatch.
  static std::int64_t common_disc(const Scalar& x, const Scalar& y);

  Rational a_, b_;
  std::int64_t d_;
};

Scalar abs(const Scalar& x);

} // namespace wtoric

namespace Eigen {
template <>
struct NumTraits<wtoric::Scalar> : GenericNumTraits<wtoric::Scalar> {
  using Real = wtoric::Scalar;
  using NonInteger = wtoric::Scalar;
  using Nested = wtoric::Scalar;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
} // namespace Eigen

#endif
