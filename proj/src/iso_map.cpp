#include "wtoric/iso_map.hpp"

#include <algorithm>
#include <sstream>

namespace wtoric {

namespace {

std::string label_list(const std::vector<int>& labels) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
  os << "}";
  return os.str();
}

// Degree-1 monomial index of each label.
std::vector<int> degree_one_index(const GradedAlgebra& ga) {
  std::vector<int> idx(ga.fc.nlabels, -1);
  const DegreeData& d1 = ga.deg[1];
  for (size_t m = 0; m < d1.monomials.size(); ++m) {
    const Expo& e = d1.monomials[m];
    for (size_t l = 0; l < e.size(); ++l) {
      if (e[l] == 1) {
        idx[l] = static_cast<int>(m);
        break;
      }
    }
  }
  return idx;
}

AlgebraElement permute_degree_one(const GradedAlgebra& ga, const std::vector<int>& mono_of_label,
                                  const std::vector<int>& label_of_mono,
                                  const std::vector<int>& perm, const AlgebraElement& x) {
  AlgebraElement out;
  out.degree = 1;
  for (const auto& [mono, c] : x.coords) {
    out.coords.emplace_back(mono_of_label[perm[label_of_mono[mono]]], c);
  }
  std::sort(out.coords.begin(), out.coords.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return normal_form(ga, out);
}

} // namespace

CCoefficients c_coefficients(const WPolytope& p, const WeylGroup& wg, const FacetOrbits& fo) {
  const int n = p.dim;
  const int nk = static_cast<int>(fo.K.size());
  Matrix walls(n, nk);  // columns are l_{H_k} = -alpha_k
  for (int j = 0; j < nk; ++j) {
    Vector col = Vector::Constant(n, Scalar(0));
    col(fo.K[j]) = Scalar(-1);
    walls.col(j) = col;
  }

  CCoefficients cc;
  cc.c.resize(fo.reps.size());
  for (size_t r = 0; r < fo.reps.size(); ++r) {
    const Vector& l_rep = p.facets[fo.reps[r]].normal;
    for (size_t ci = 0; ci < fo.cosets[r].size(); ++ci) {
      const int elem = fo.cosets[r][ci];
      const Vector rhs = p.facets[fo.facet_of[r][ci]].normal - l_rep;
      auto x = solve(walls, rhs);
      if (!x) {
        throw Error("c_coefficients: s(l_F) - l_F leaves the wall span (equivariance bug)");
      }
      for (int j = 0; j < nk; ++j) {
        if ((*x)(j).sign() < 0) throw Error("c_coefficients: negative coefficient");
      }
      if (elem == wg.identity()) {
        for (int j = 0; j < nk; ++j) {
          if (!(*x)(j).is_zero()) throw Error("c_coefficients: nonzero coefficient at s = e");
        }
      }
      const std::vector<int> supp = word_support(wg, elem);
      for (int j = 0; j < nk; ++j) {
        if ((*x)(j).sign() > 0 &&
            !std::binary_search(supp.begin(), supp.end(), fo.K[j])) {
          throw Error("c_coefficients: support outside the minimal parabolic of s");
        }
      }
      cc.c[r].push_back(std::move(*x));
    }
  }
  return cc;
}

PsiMap build_psi(const GradedAlgebra& aq, const GradedAlgebra& ap, const QuotientPolytope& q,
                 const FacetOrbits& fo, const CCoefficients& cc) {
  if (aq.fc.nlabels != static_cast<int>(q.facets.size())) {
    throw Error("build_psi: quotient algebra does not match the quotient polytope");
  }
  const std::vector<int> mono_of_label = degree_one_index(ap);

  PsiMap psi;
  for (const QuotientFacet& f : q.facets) {
    std::vector<std::pair<int, Scalar>> raw;  // (facet id, coefficient)
    if (!f.is_wall) {
      const int r = fo.rep_position(f.source);
      if (r < 0) throw Error("build_psi: quotient facet source is not an orbit representative");
      for (int facet_id : fo.facet_of[r]) raw.emplace_back(facet_id, Scalar(1));
    } else {
      int kpos = -1;
      for (size_t j = 0; j < fo.K.size(); ++j) {
        if (fo.K[j] == f.source) kpos = static_cast<int>(j);
      }
      if (kpos < 0) throw Error("build_psi: wall label outside K");
      for (size_t r = 0; r < fo.reps.size(); ++r) {
        for (size_t ci = 0; ci < fo.cosets[r].size(); ++ci) {
          const Scalar& coef = cc.c[r][ci](kpos);
          if (coef.is_zero()) continue;
          raw.emplace_back(fo.facet_of[r][ci], coef);
        }
      }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    AlgebraElement img;
    img.degree = 1;
    for (const auto& [facet_id, coef] : raw) {
      img.coords.emplace_back(mono_of_label[facet_id], coef);
    }
    std::sort(img.coords.begin(), img.coords.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    psi.raw_images.push_back(std::move(raw));
    psi.images.push_back(normal_form(ap, img));
  }
  return psi;
}

AlgebraElement psi_evaluate(const GradedAlgebra& ap, const PsiMap& psi,
                            const Expo& quotient_monomial) {
  AlgebraElement acc;
  acc.degree = 0;
  acc.coords.emplace_back(0, Scalar(1));
  acc.canonical = true;
  for (size_t l = 0; l < quotient_monomial.size(); ++l) {
    for (int rep = 0; rep < quotient_monomial[l]; ++rep) {
      acc = multiply(ap, acc, psi.images[l]);
      if (acc.is_zero()) return acc;
    }
  }
  return acc;
}

Dossier verify_psi(const GradedAlgebra& aq, GradedAlgebra& ap, const WPolytope& p,
                   const WeylGroup& wg, const FacetOrbits& fo, const PsiMap& psi) {
  Dossier out;
  const int n = ap.n;

  // (a) the quotient Stanley-Reisner ideal dies in A(P)
  {
    const std::vector<std::vector<int>> gens = minimal_nonfaces(aq.fc, n + 1);
    for (const auto& g : gens) {
      if (static_cast<int>(g.size()) > ap.max_deg) ensure_degree(ap, static_cast<int>(g.size()));
    }
    for (const auto& g : gens) {
      Expo e(aq.fc.nlabels, 0);
      for (int l : g) e[l] = 1;
      AlgebraElement img = psi_evaluate(ap, psi, e);
      if (!img.is_zero()) {
        out.kernel_I.pass = false;
        out.kernel_I.witness = "psi of ideal generator " + label_list(g) + " is nonzero";
        break;
      }
    }
    if (out.kernel_I.pass && !gens.empty()) {
      out.kernel_I.witness = "psi of ideal generator " + label_list(gens[0]) + " reduces to 0";
    }
  }

  // (b) the quotient linear forms die in A(P)
  for (int i = 0; i < n && out.kernel_J.pass; ++i) {
    AlgebraElement acc;
    acc.degree = 1;
    acc.canonical = true;
    for (int l = 0; l < aq.fc.nlabels; ++l) {
      if (aq.eta(i, l).is_zero()) continue;
      acc = element_add(acc, element_scale(aq.eta(i, l), psi.images[l]));
    }
    if (!acc.is_zero()) {
      out.kernel_J.pass = false;
      out.kernel_J.witness = "psi of eta_" + std::to_string(i + 1) + " is nonzero";
    }
  }

  // (c) generator images are W_K-invariant
  {
    const std::vector<int> mono_of_label = degree_one_index(ap);
    std::vector<int> label_of_mono(ap.deg[1].monomials.size(), -1);
    for (int l = 0; l < ap.fc.nlabels; ++l) label_of_mono[mono_of_label[l]] = l;
    for (int k : fo.K) {
      const std::vector<int>& perm = p.facet_perm[wg.simple(k)];
      for (size_t li = 0; li < psi.images.size() && out.invariance.pass; ++li) {
        AlgebraElement moved =
            permute_degree_one(ap, mono_of_label, label_of_mono, perm, psi.images[li]);
        AlgebraElement diff = element_add(moved, element_scale(Scalar(-1), psi.images[li]));
        if (!diff.is_zero()) {
          out.invariance.pass = false;
          out.invariance.witness = "image of quotient generator " + std::to_string(li) +
                                   " moves under r_" + std::to_string(k + 1);
        }
      }
      if (!out.invariance.pass) break;
    }
  }

  // (d) + (e): per-degree dimension equality and bijectivity onto invariants
  std::vector<std::vector<int>> perms;
  for (int e : fo.subgroup.element_indices) perms.push_back(p.facet_perm[e]);
  for (int d = 0; d <= n; ++d) {
    const Matrix inv = invariant_basis(ap, perms, d);
    const int dim_inv = static_cast<int>(inv.rows());
    const int dim_q = aq.dim(d);
    out.dims_quotient.push_back(dim_q);
    out.dims_invariant.push_back(dim_inv);
    if (dim_q != dim_inv) {
      out.dims_equal.pass = false;
      if (out.dims_equal.witness.empty()) {
        out.dims_equal.witness = "degree " + std::to_string(d) + ": dim A^d(P/W_K) = " +
                                 std::to_string(dim_q) + " but invariants have dim " +
                                 std::to_string(dim_inv);
      }
    }
    Matrix images(dim_q, ap.dims[d]);
    for (int j = 0; j < dim_q; ++j) {
      const Expo& e = aq.deg[d].monomials[aq.deg[d].basis[j]];
      images.row(j) = basis_coords(ap, psi_evaluate(ap, psi, e)).transpose();
    }
    if (rref(images).rank != dim_q) {
      out.bijective.pass = false;
      if (out.bijective.witness.empty()) {
        out.bijective.witness = "degree " + std::to_string(d) + ": psi images are dependent";
      }
      continue;
    }
    Matrix stacked(dim_inv + dim_q, ap.dims[d]);
    stacked.topRows(dim_inv) = inv;
    stacked.bottomRows(dim_q) = images;
    if (rref(std::move(stacked)).rank != dim_inv) {
      out.bijective.pass = false;
      if (out.bijective.witness.empty()) {
        out.bijective.witness =
            "degree " + std::to_string(d) + ": psi image leaves the invariant subspace";
      }
    }
  }
  if (!out.dims_equal.pass) out.bijective.pass = false;
  return out;
}

KVerification run_k_verification(const RootSystem& rs, const WeylGroup& wg, const WPolytope& p,
                                 GradedAlgebra& ap, const std::vector<int>& K) {
  KVerification kv;
  kv.fo = facet_orbits(p, wg, K);
  kv.q = quotient_polytope(p, rs, K);
  kv.aq = build_graded_algebra(face_complex(kv.q), linear_forms(rs, kv.q), kv.q.hvec);
  kv.cc = c_coefficients(p, wg, kv.fo);
  kv.psi = build_psi(kv.aq, ap, kv.q, kv.fo, kv.cc);
  kv.dossier = verify_psi(kv.aq, ap, p, wg, kv.fo, kv.psi);
  return kv;
}

ScalingCheck verify_scaling_invariance(const RootSystem& rs, const WeylGroup& wg,
                                       const WPolytope& p, const std::vector<int>& K,
                                       const std::vector<std::pair<int, Scalar>>& orbit_scale) {
  ScalingCheck result;
  const WPolytope p2 = rescale_normals(p, orbit_scale);

  const FaceComplex fc = face_complex(p);
  GradedAlgebra a1 = build_graded_algebra(fc, linear_forms(rs, p), p.hvec);
  GradedAlgebra a2 = build_graded_algebra(fc, linear_forms(rs, p2), p2.hvec);

  // per-label factor: c of the facet's orbit (1 where the orbit is unscaled)
  std::vector<Scalar> factor(fc.nlabels, Scalar(1));
  for (const auto& [rep, s] : orbit_scale) {
    for (int l = 0; l < fc.nlabels; ++l) {
      if (p.facets[l].orbit_rep == rep) factor[l] = s;
    }
  }
  auto monomial_factor = [&](const Expo& e) {
    Scalar f(1);
    for (size_t l = 0; l < e.size(); ++l) {
      for (int t = 0; t < e[l]; ++t) f *= factor[l];
    }
    return f;
  };

  // X_F -> X_F / c_F carries the relation space of a2 onto that of a1 and
  // conversely; dimensions agree by construction.
  for (int d = 1; d <= a1.n; ++d) {
    if (a1.dims[d] != a2.dims[d]) {
      result.detail = "graded dimensions differ in degree " + std::to_string(d);
      return result;
    }
    for (int dir = 0; dir < 2; ++dir) {
      const GradedAlgebra& from = dir == 0 ? a2 : a1;
      const GradedAlgebra& to = dir == 0 ? a1 : a2;
      for (const SparseVec& row : from.deg[d].rows) {
        AlgebraElement mapped;
        mapped.degree = d;
        for (const auto& [mono, coef] : row) {
          const Expo& e = from.deg[d].monomials[mono];
          const Scalar f = monomial_factor(e);
          mapped.coords.emplace_back(mono, dir == 0 ? coef / f : coef * f);
        }
        if (!normal_form(to, mapped).is_zero()) {
          result.detail = "relation space not preserved in degree " + std::to_string(d);
          return result;
        }
      }
    }
  }

  KVerification kv = run_k_verification(rs, wg, p2, a2, K);
  if (!kv.dossier.all_true()) {
    result.detail = "dossier failed on rescaled data";
    return result;
  }
  result.ok = true;
  result.detail = "rescaling X_F -> X_F/c_F is a graded bijection; dossier all-true";
  return result;
}

} // namespace wtoric
