#include "wtoric/linalg.hpp"

namespace wtoric {

using boost::multiprecision::mpz_int;

GramForm::GramForm(Matrix m) : g(std::move(m)) {
  const auto n = g.rows();
  if (n != g.cols()) throw Error("GramForm: square matrix required");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (g(i, j) != g(j, i)) throw Error("GramForm: matrix not symmetric");
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (determinant(g.topLeftCorner(k, k)).sign() <= 0)
      throw Error("GramForm: matrix not positive definite");
  }
}

Scalar inner_product(const Vector& u, const Vector& v, const GramForm& g) {
  if (u.size() != g.g.rows() || v.size() != g.g.rows())
    throw Error("inner_product: dimension mismatch");
  Scalar acc(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (v(j).is_zero() || g.g(i, j).is_zero()) continue;
      acc += u(i) * g.g(i, j) * v(j);
    }
  }
  return acc;
}

RrefResult rref(Matrix m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  int r = 0;
  std::vector<int> pivots;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar piv = m(r, c);
    for (int j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) /= piv;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Scalar f = m(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {r, std::move(m), std::move(pivots)};
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw Error("solve: dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  RrefResult r = rref(std::move(aug));
  for (int p : r.pivot_columns) {
    if (p == static_cast<int>(a.cols())) return std::nullopt;
  }
  Vector x = Vector::Constant(a.cols(), Scalar(0));
  for (size_t i = 0; i < r.pivot_columns.size(); ++i) {
    x(r.pivot_columns[i]) = r.reduced(static_cast<Eigen::Index>(i), a.cols());
  }
  return x;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const int cols = static_cast<int>(m.cols());
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivot_columns) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector k = Vector::Constant(cols, Scalar(0));
    k(f) = Scalar(1);
    for (size_t i = 0; i < r.pivot_columns.size(); ++i) {
      const Scalar& coef = r.reduced(static_cast<Eigen::Index>(i), f);
      if (!coef.is_zero()) k(r.pivot_columns[i]) = -coef;
    }
    basis.push_back(std::move(k));
  }
  return basis;
}

Scalar determinant(Matrix m) {
  const int n = static_cast<int>(m.rows());
  if (n != m.cols()) throw Error("determinant: square matrix required");
  Scalar det(1);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) { p = i; break; }
    }
    if (p < 0) return Scalar(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (int i = c + 1; i < n; ++i) {
      const Scalar f = m(i, c) / m(c, c);
      if (f.is_zero()) continue;
      for (int j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

int affine_rank(const std::vector<Vector>& points, const std::vector<int>& subset) {
  if (subset.empty()) return -1;
  if (subset.size() == 1) return 0;
  const Vector& p0 = points[subset[0]];
  Matrix diffs(static_cast<Eigen::Index>(subset.size()) - 1, p0.size());
  for (size_t i = 1; i < subset.size(); ++i) {
    diffs.row(static_cast<Eigen::Index>(i - 1)) = (points[subset[i]] - p0).transpose();
  }
  return rref(std::move(diffs)).rank;
}

bool is_zero_vector(const Vector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

bool vec_eq(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return false;
  return true;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

Rational vector_content(const Vector& v) {
  mpz_int num_gcd = 0;
  mpz_int den_lcm = 1;
  bool any = false;
  auto feed = [&](const Rational& r) {
    if (r.is_zero()) return;
    any = true;
    num_gcd = gcd(num_gcd, mpz_int(abs(numerator(r))));
    den_lcm = lcm(den_lcm, mpz_int(denominator(r)));
  };
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    feed(v(i).rat_part());
    feed(v(i).irr_part());
  }
  if (!any) throw Error("vector_content: zero vector");
  return Rational(num_gcd) / Rational(den_lcm);
}

} // namespace wtoric
