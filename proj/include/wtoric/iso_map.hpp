#ifndef WTORIC_ISO_MAP_HPP
#define WTORIC_ISO_MAP_HPP

#include "wtoric/sr_algebra.hpp"

#include <string>
#include <vector>

namespace wtoric {

// Coefficients C_{F,s,k} of s(l_F) - l_F = sum_k C_{F,s,k} * l_{H_k}, with
// l_{H_k} = -alpha_k. Indexed by (representative position, coset position);
// each entry is a |K|-vector. All entries are checked non-negative, zero at
// s = e, and supported on the reduced-word support of s.
struct CCoefficients {
  std::vector<std::vector<Vector>> c;
};

CCoefficients c_coefficients(const WPolytope& p, const WeylGroup& wg, const FacetOrbits& fo);

// Generator images of psi : A(P/W_K) -> A(P)^{W_K}; quotient label order
// (X labels by representative, then Y labels by k), each a canonical
// degree-1 element of A(P). Higher degrees evaluate multiplicatively.
// raw_images keeps the defining sums over the SR^1 monomials (coefficient
// of the P facet label), before reduction.
struct PsiMap {
  std::vector<AlgebraElement> images;
  std::vector<std::vector<std::pair<int, Scalar>>> raw_images;  // (facet id, coefficient)
};

PsiMap build_psi(const GradedAlgebra& aq, const GradedAlgebra& ap, const QuotientPolytope& q,
                 const FacetOrbits& fo, const CCoefficients& cc);

AlgebraElement psi_evaluate(const GradedAlgebra& ap, const PsiMap& psi, const Expo& quotient_monomial);

struct DossierCheck {
  bool pass = true;
  std::string witness;  // set when the check fails (or for a sample success)
};

struct Dossier {
  DossierCheck kernel_I;     // SR ideal generators of the quotient map to 0
  DossierCheck kernel_J;     // quotient linear forms map to 0
  DossierCheck invariance;   // generator images fixed by every r_k, k in K
  DossierCheck dims_equal;   // dim A^d(P/W_K) = dim (A^d(P))^{W_K}
  DossierCheck bijective;    // full rank onto the invariant subspace, each degree
  std::vector<int> dims_quotient, dims_invariant;

  bool all_true() const {
    return kernel_I.pass && kernel_J.pass && invariance.pass && dims_equal.pass && bijective.pass;
  }
};

Dossier verify_psi(const GradedAlgebra& aq, GradedAlgebra& ap, const WPolytope& p,
                   const WeylGroup& wg, const FacetOrbits& fo, const PsiMap& psi);

// One K at a time: orbit data, quotient, quotient algebra, coefficients,
// psi and its dossier. ap is the shared ambient algebra A(P); it may gain
// one extra degree when a quotient ideal generator has size n+1.
struct KVerification {
  FacetOrbits fo;
  QuotientPolytope q;
  GradedAlgebra aq;
  CCoefficients cc;
  PsiMap psi;
  Dossier dossier;
};

KVerification run_k_verification(const RootSystem& rs, const WeylGroup& wg, const WPolytope& p,
                                 GradedAlgebra& ap, const std::vector<int>& K);

struct ScalingCheck {
  bool ok = false;
  std::string detail;
};

// Rebuild both algebras with per-orbit rescaled normals, check that
// X_F -> X_F / c_F is a graded bijection matching dimensions and relation
// spaces in both directions, and re-run the full psi dossier on the
// rescaled data.
ScalingCheck verify_scaling_invariance(const RootSystem& rs, const WeylGroup& wg,
                                       const WPolytope& p, const std::vector<int>& K,
                                       const std::vector<std::pair<int, Scalar>>& orbit_scale);

} // namespace wtoric

#endif
