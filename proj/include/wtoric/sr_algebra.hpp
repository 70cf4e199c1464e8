#ifndef WTORIC_SR_ALGEBRA_HPP
#define WTORIC_SR_ALGEBRA_HPP

#include "wtoric/polytope.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace wtoric {

// Labels with a shared-vertex oracle: a label subset supports a nonempty
// face iff the labeled facets have a common vertex.
struct FaceComplex {
  int nlabels = 0;
  std::size_t nverts = 0;
  std::vector<Bitset> label_bits;
  std::vector<std::vector<int>> vertex_labels;  // per vertex, ascending

  bool face(const std::vector<int>& labels) const;
};

FaceComplex face_complex(const WPolytope& p);
FaceComplex face_complex(const QuotientPolytope& q);

// Coefficients of the n linear forms eta_i = sum_F <alpha_i, l_F> X_F over
// the labels (for a quotient, the wall label k contributes <alpha_i, -alpha_k>).
Matrix linear_forms(const RootSystem& rs, const WPolytope& p);
Matrix linear_forms(const RootSystem& rs, const QuotientPolytope& q);

using Expo = std::vector<std::uint8_t>;
using SparseVec = std::vector<std::pair<int, Scalar>>;  // ascending index

struct AlgebraElement {
  int degree = 0;
  SparseVec coords;  // over the SR^degree monomial basis
  bool canonical = false;

  bool is_zero() const { return coords.empty(); }
};

struct DegreeData {
  std::vector<Expo> monomials;  // descending lexicographic order
  std::map<Expo, int> index;
  std::vector<SparseVec> rows;      // canonical rref of the relation space
  std::vector<int> row_of_pivot;    // monomial id -> row index, or -1
  std::vector<int> basis;           // non-pivot monomial ids (A^d basis)
};

// A(Q) = SR(Q)/(relations generated by the eta_i), presented degree by
// degree: monomial bases, canonical relation rrefs, quotient bases. Graded
// dimensions are checked against the geometric h-vector.
struct GradedAlgebra {
  int n = 0;         // top degree = polytope dimension
  int max_deg = 0;   // degrees built so far
  FaceComplex fc;
  Matrix eta;        // n x nlabels
  std::vector<DegreeData> deg;
  std::vector<int> dims;
  std::vector<long long> hvec;
  int top_monomial = -1;   // the unique A^n basis monomial
  Scalar top_unit;         // coordinate of the chosen top class at top_monomial

  int dim(int d) const { return d <= max_deg ? dims[d] : 0; }
};

std::vector<Expo> sr_monomial_basis(const FaceComplex& fc, int d);

GradedAlgebra build_graded_algebra(const FaceComplex& fc, const Matrix& eta,
                                   const std::vector<long long>& hvec);
// Extends the relation data to higher degrees (the graded dimension there
// must be 0; checked).
void ensure_degree(GradedAlgebra& ga, int d);

AlgebraElement normal_form(const GradedAlgebra& ga, const AlgebraElement& x);
AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement element_scale(const Scalar& c, AlgebraElement x);
AlgebraElement multiply(const GradedAlgebra& ga, const AlgebraElement& x, const AlgebraElement& y);

AlgebraElement monomial_element(const GradedAlgebra& ga, const Expo& e);
AlgebraElement generator_element(const GradedAlgebra& ga, int label);

// Canonical coordinates over the A^d quotient basis.
Vector basis_coords(const GradedAlgebra& ga, const AlgebraElement& x);
AlgebraElement from_basis_coords(const GradedAlgebra& ga, int d, const Vector& coords);

// Coefficient against the chosen top class (the first vertex monomial in
// label order, normalized to canonical coordinate 1).
Scalar top_coefficient(const GradedAlgebra& ga, const AlgebraElement& x);

// Action of a facet-label permutation on A^d over the quotient basis.
Matrix group_action(const GradedAlgebra& ga, const std::vector<int>& label_perm, int d);
std::vector<Scalar> graded_character(const GradedAlgebra& ga, const std::vector<int>& label_perm);

// Basis of the fixed subspace under the listed label permutations
// (Reynolds average followed by a canonical rref), as rows of a matrix.
Matrix invariant_basis(const GradedAlgebra& ga, const std::vector<std::vector<int>>& label_perms,
                       int d);

Matrix pairing_matrix(const GradedAlgebra& ga, int d);
bool pd_check(const GradedAlgebra& ga);
bool vertex_monomial_consistency(const GradedAlgebra& ga);

// Minimal non-faces (the Stanley-Reisner ideal generators), ascending sizes,
// each as an ascending label list. max_size caps the search; n+1 suffices
// for the simple polytopes handled here.
std::vector<std::vector<int>> minimal_nonfaces(const FaceComplex& fc, int max_size);

} // namespace wtoric

#endif
