#ifndef WTORIC_LINALG_HPP
#define WTORIC_LINALG_HPP

#include "wtoric/scalar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace wtoric {

using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Symmetric positive definite bilinear form on V, expressed in the simple
// root basis: g(i,j) = <alpha_i, alpha_j>. Definiteness is checked exactly
// through the leading principal minors.
struct GramForm {
  Matrix g;
  GramForm() = default;
  explicit GramForm(Matrix m);
  int rank() const { return static_cast<int>(g.rows()); }
};

Scalar inner_product(const Vector& u, const Vector& v, const GramForm& g);

struct RrefResult {
  int rank = 0;
  Matrix reduced;
  std::vector<int> pivot_columns;
};

// Reduced row echelon form. Pivot rule: leftmost candidate column first;
// among the remaining rows, the one with the lowest index; pivots
// normalized to 1. The result is the canonical rref of the row space.
RrefResult rref(Matrix m);

// Exact solution of a x = b under the rref pivot rule (free variables 0).
// Inconsistency is reported as std::nullopt, not as an error.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Canonical kernel basis derived from the rref: one vector per free column,
// in ascending column order. Empty iff full column rank.
std::vector<Vector> kernel_basis(const Matrix& m);

Scalar determinant(Matrix m);

int affine_rank(const std::vector<Vector>& points, const std::vector<int>& subset);

bool is_zero_vector(const Vector& v);
bool vec_eq(const Vector& a, const Vector& b);
bool mat_eq(const Matrix& a, const Matrix& b);

struct VecLexLess {
  bool operator()(const Vector& a, const Vector& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a(i) < b(i)) return true;
      if (b(i) < a(i)) return false;
    }
    return false;
  }
};

// Largest positive rational content of a nonzero vector over Q(sqrt(d)):
// dividing by it leaves the rational and irrational parts with coprime
// integer entries. Preserves direction and sign.
Rational vector_content(const Vector& v);

} // namespace wtoric

#endif
