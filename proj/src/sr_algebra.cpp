#include "wtoric/sr_algebra.hpp"

#include <algorithm>
#include <functional>

namespace wtoric {

namespace {

Bitset full_bits(std::size_t nverts) {
  Bitset b = bitset_make(nverts);
  for (std::size_t v = 0; v < nverts; ++v) bitset_set(b, v);
  return b;
}

// work -= c * row, where row is a canonical rref row (pivot first).
void subtract_row(std::map<int, Scalar>& work, const Scalar& c, const SparseVec& row,
                  bool skip_pivot) {
  for (size_t i = skip_pivot ? 1 : 0; i < row.size(); ++i) {
    const auto& [col, val] = row[i];
    auto it = work.find(col);
    if (it == work.end()) {
      work.emplace(col, -(c * val));
    } else {
      it->second -= c * val;
      if (it->second.is_zero()) work.erase(it);
    }
  }
}

// Incrementally maintained canonical rref of a growing row space.
struct RrefAccum {
  std::map<int, int> row_of_pivot;
  std::vector<SparseVec> rows;

  void add(const SparseVec& r) {
    std::map<int, Scalar> work(r.begin(), r.end());
    SparseVec reduced;
    while (!work.empty()) {
      auto it = work.begin();
      const int col = it->first;
      const Scalar val = it->second;
      work.erase(it);
      if (val.is_zero()) continue;
      auto pr = row_of_pivot.find(col);
      if (pr != row_of_pivot.end()) {
        subtract_row(work, val, rows[pr->second], true);
      } else {
        reduced.emplace_back(col, val);
      }
    }
    if (reduced.empty()) return;
    const Scalar lead = reduced[0].second;
    for (auto& [col, val] : reduced) val /= lead;
    const int pivot = reduced[0].first;
    // keep existing rows fully reduced against the new pivot
    for (SparseVec& row : rows) {
      auto hit = std::lower_bound(row.begin(), row.end(), pivot,
                                  [](const auto& e, int c) { return e.first < c; });
      if (hit == row.end() || hit->first != pivot) continue;
      const Scalar c = hit->second;
      std::map<int, Scalar> w(row.begin(), row.end());
      subtract_row(w, c, reduced, false);
      row.assign(w.begin(), w.end());
    }
    row_of_pivot.emplace(pivot, static_cast<int>(rows.size()));
    rows.push_back(std::move(reduced));
  }
};

void gen_monomials(const FaceComplex& fc, int next_label, int remaining, const Bitset& common,
                   Expo& cur, std::vector<Expo>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int l = next_label; l < fc.nlabels; ++l) {
    Bitset meet = bitset_and(common, fc.label_bits[l]);
    if (bitset_empty(meet)) continue;
    for (int e = 1; e <= remaining; ++e) {
      cur[l] = static_cast<std::uint8_t>(e);
      gen_monomials(fc, l + 1, remaining - e, meet, cur, out);
    }
    cur[l] = 0;
  }
}

void build_degree(GradedAlgebra& ga, int d) {
  DegreeData data;
  data.monomials = sr_monomial_basis(ga.fc, d);
  for (size_t i = 0; i < data.monomials.size(); ++i) {
    data.index.emplace(data.monomials[i], static_cast<int>(i));
  }

  RrefAccum acc;
  const DegreeData& prev = ga.deg[d - 1];
  for (int i = 0; i < ga.n; ++i) {
    for (const Expo& m : prev.monomials) {
      SparseVec row;
      for (int l = 0; l < ga.fc.nlabels; ++l) {
        if (ga.eta(i, l).is_zero()) continue;
        Expo prod = m;
        prod[l] = static_cast<std::uint8_t>(prod[l] + 1);
        auto it = data.index.find(prod);
        if (it == data.index.end()) continue;  // non-face: lies in the SR ideal
        row.emplace_back(it->second, ga.eta(i, l));
      }
      std::sort(row.begin(), row.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      acc.add(row);
    }
  }

  data.row_of_pivot.assign(data.monomials.size(), -1);
  std::vector<int> order;
  for (const auto& [pivot, idx] : acc.row_of_pivot) order.push_back(idx);
  data.rows.reserve(order.size());
  for (int idx : order) {
    data.rows.push_back(std::move(acc.rows[idx]));
    data.row_of_pivot[data.rows.back()[0].first] = static_cast<int>(data.rows.size()) - 1;
  }
  for (size_t m = 0; m < data.monomials.size(); ++m) {
    if (data.row_of_pivot[m] < 0) data.basis.push_back(static_cast<int>(m));
  }

  const long long expected = d <= ga.n ? ga.hvec[d] : 0;
  if (static_cast<long long>(data.basis.size()) != expected) {
    throw Error("graded dimension " + std::to_string(data.basis.size()) + " in degree " +
                std::to_string(d) + " does not match h_" + std::to_string(d) + " = " +
                std::to_string(expected));
  }
  ga.deg.push_back(std::move(data));
  ga.dims.push_back(static_cast<int>(ga.deg.back().basis.size()));
  ga.max_deg = d;
}

int basis_position(const DegreeData& dd, int monomial_id) {
  auto it = std::lower_bound(dd.basis.begin(), dd.basis.end(), monomial_id);
  if (it == dd.basis.end() || *it != monomial_id) return -1;
  return static_cast<int>(it - dd.basis.begin());
}

} // namespace

bool FaceComplex::face(const std::vector<int>& labels) const {
  if (labels.empty()) return true;
  Bitset b = label_bits[labels[0]];
  for (size_t i = 1; i < labels.size(); ++i) b = bitset_and(b, label_bits[labels[i]]);
  return !bitset_empty(b);
}

FaceComplex face_complex(const WPolytope& p) {
  FaceComplex fc;
  fc.nlabels = static_cast<int>(p.facets.size());
  fc.nverts = p.vertices.size();
  for (const Facet& f : p.facets) fc.label_bits.push_back(f.vbits);
  fc.vertex_labels = p.vertex_facets;
  return fc;
}

FaceComplex face_complex(const QuotientPolytope& q) {
  FaceComplex fc;
  fc.nlabels = static_cast<int>(q.facets.size());
  fc.nverts = q.vertices.size();
  for (const QuotientFacet& f : q.facets) fc.label_bits.push_back(f.vbits);
  fc.vertex_labels = q.vertex_facets;
  return fc;
}

Matrix linear_forms(const RootSystem& rs, const WPolytope& p) {
  Matrix eta(rs.rank, static_cast<Eigen::Index>(p.facets.size()));
  for (size_t f = 0; f < p.facets.size(); ++f) {
    eta.col(static_cast<Eigen::Index>(f)) = p.facets[f].covector;
  }
  if (rref(eta).rank != rs.rank) throw Error("linear_forms: forms do not span (normals degenerate)");
  return eta;
}

Matrix linear_forms(const RootSystem& rs, const QuotientPolytope& q) {
  Matrix eta(rs.rank, static_cast<Eigen::Index>(q.facets.size()));
  for (size_t f = 0; f < q.facets.size(); ++f) {
    eta.col(static_cast<Eigen::Index>(f)) = rs.gram.g * q.facets[f].normal;
  }
  if (rref(eta).rank != rs.rank) throw Error("linear_forms: forms do not span (normals degenerate)");
  return eta;
}

std::vector<Expo> sr_monomial_basis(const FaceComplex& fc, int d) {
  if (d < 0) throw Error("sr_monomial_basis: negative degree");
  std::vector<Expo> out;
  if (d == 0) {
    out.emplace_back(fc.nlabels, 0);
    return out;
  }
  Expo cur(fc.nlabels, 0);
  gen_monomials(fc, 0, d, full_bits(fc.nverts), cur, out);
  std::sort(out.begin(), out.end(), std::greater<Expo>());
  return out;
}

GradedAlgebra build_graded_algebra(const FaceComplex& fc, const Matrix& eta,
                                   const std::vector<long long>& hvec) {
  GradedAlgebra ga;
  ga.n = static_cast<int>(eta.rows());
  ga.fc = fc;
  ga.eta = eta;
  ga.hvec = hvec;
  if (static_cast<int>(hvec.size()) != ga.n + 1) throw Error("build_graded_algebra: bad h-vector");
  if (hvec[0] != 1) throw Error("build_graded_algebra: h_0 != 1");
  if (hvec[ga.n] != 1) throw Error("build_graded_algebra: h_n != 1 (non-simple input?)");

  DegreeData d0;
  d0.monomials.emplace_back(fc.nlabels, 0);
  d0.index.emplace(d0.monomials[0], 0);
  d0.row_of_pivot.assign(1, -1);
  d0.basis.push_back(0);
  ga.deg.push_back(std::move(d0));
  ga.dims.push_back(1);
  ga.max_deg = 0;

  for (int d = 1; d <= ga.n; ++d) build_degree(ga, d);

  ga.top_monomial = ga.deg[ga.n].basis[0];

  // Chosen top class: the first vertex monomial in the monomial order,
  // rescaled to canonical coordinate 1.
  Expo first;
  for (const auto& labels : fc.vertex_labels) {
    if (static_cast<int>(labels.size()) != ga.n) {
      throw Error("build_graded_algebra: vertex not on exactly n facets (non-simple input)");
    }
    Expo e(fc.nlabels, 0);
    for (int l : labels) e[l] = 1;
    if (first.empty() || e > first) first = e;
  }
  if (first.empty()) throw Error("build_graded_algebra: no vertices");
  AlgebraElement vm = normal_form(ga, monomial_element(ga, first));
  if (vm.coords.size() != 1 || vm.coords[0].first != ga.top_monomial) {
    throw Error("build_graded_algebra: vertex monomial does not hit the top class");
  }
  ga.top_unit = vm.coords[0].second;
  return ga;
}

void ensure_degree(GradedAlgebra& ga, int d) {
  while (ga.max_deg < d) build_degree(ga, ga.max_deg + 1);
}

AlgebraElement normal_form(const GradedAlgebra& ga, const AlgebraElement& x) {
  if (x.canonical) return x;
  if (x.degree > ga.max_deg) throw Error("normal_form: degree not built");
  const DegreeData& dd = ga.deg[x.degree];
  std::map<int, Scalar> work(x.coords.begin(), x.coords.end());
  AlgebraElement out;
  out.degree = x.degree;
  out.canonical = true;
  while (!work.empty()) {
    auto it = work.begin();
    const int col = it->first;
    const Scalar val = it->second;
    work.erase(it);
    if (val.is_zero()) continue;
    const int row = dd.row_of_pivot[col];
    if (row >= 0) {
      subtract_row(work, val, dd.rows[row], true);
    } else {
      out.coords.emplace_back(col, val);
    }
  }
  return out;
}

AlgebraElement element_add(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.degree != y.degree) throw Error("element_add: degree mismatch");
  AlgebraElement out;
  out.degree = x.degree;
  out.canonical = x.canonical && y.canonical;
  size_t i = 0, j = 0;
  while (i < x.coords.size() || j < y.coords.size()) {
    if (j == y.coords.size() || (i < x.coords.size() && x.coords[i].first < y.coords[j].first)) {
      out.coords.push_back(x.coords[i++]);
    } else if (i == x.coords.size() || y.coords[j].first < x.coords[i].first) {
      out.coords.push_back(y.coords[j++]);
    } else {
      Scalar s = x.coords[i].second + y.coords[j].second;
      if (!s.is_zero()) out.coords.emplace_back(x.coords[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

AlgebraElement element_scale(const Scalar& c, AlgebraElement x) {
  if (c.is_zero()) {
    x.coords.clear();
    return x;
  }
  for (auto& [col, val] : x.coords) val *= c;
  return x;
}

AlgebraElement multiply(const GradedAlgebra& ga, const AlgebraElement& x, const AlgebraElement& y) {
  const int d = x.degree + y.degree;
  if (d > ga.max_deg) throw Error("multiply: degree overflow");
  const DegreeData& dx = ga.deg[x.degree];
  const DegreeData& dy = ga.deg[y.degree];
  const DegreeData& dt = ga.deg[d];
  std::map<int, Scalar> accum;
  for (const auto& [mi, ci] : x.coords) {
    for (const auto& [mj, cj] : y.coords) {
      Expo prod = dx.monomials[mi];
      const Expo& other = dy.monomials[mj];
      for (size_t l = 0; l < prod.size(); ++l) {
        prod[l] = static_cast<std::uint8_t>(prod[l] + other[l]);
      }
      auto it = dt.index.find(prod);
      if (it == dt.index.end()) continue;  // hits the SR ideal
      auto [slot, fresh] = accum.emplace(it->second, ci * cj);
      if (!fresh) {
        slot->second += ci * cj;
        if (slot->second.is_zero()) accum.erase(slot);
      }
    }
  }
  AlgebraElement raw;
  raw.degree = d;
  raw.coords.assign(accum.begin(), accum.end());
  return normal_form(ga, raw);
}

AlgebraElement monomial_element(const GradedAlgebra& ga, const Expo& e) {
  int d = 0;
  for (std::uint8_t v : e) d += v;
  const DegreeData& dd = ga.deg[d];
  auto it = dd.index.find(e);
  AlgebraElement out;
  out.degree = d;
  if (it != dd.index.end()) out.coords.emplace_back(it->second, Scalar(1));
  return out;
}

AlgebraElement generator_element(const GradedAlgebra& ga, int label) {
  Expo e(ga.fc.nlabels, 0);
  e[label] = 1;
  return normal_form(ga, monomial_element(ga, e));
}

Vector basis_coords(const GradedAlgebra& ga, const AlgebraElement& x) {
  AlgebraElement c = normal_form(ga, x);
  const DegreeData& dd = ga.deg[c.degree];
  Vector out = Vector::Constant(static_cast<Eigen::Index>(dd.basis.size()), Scalar(0));
  for (const auto& [col, val] : c.coords) {
    const int pos = basis_position(dd, col);
    if (pos < 0) throw Error("basis_coords: canonical element off the quotient basis");
    out(pos) = val;
  }
  return out;
}

AlgebraElement from_basis_coords(const GradedAlgebra& ga, int d, const Vector& coords) {
  const DegreeData& dd = ga.deg[d];
  if (coords.size() != static_cast<Eigen::Index>(dd.basis.size())) {
    throw Error("from_basis_coords: wrong length");
  }
  AlgebraElement out;
  out.degree = d;
  out.canonical = true;
  for (Eigen::Index i = 0; i < coords.size(); ++i) {
    if (!coords(i).is_zero()) out.coords.emplace_back(dd.basis[i], coords(i));
  }
  return out;
}

Scalar top_coefficient(const GradedAlgebra& ga, const AlgebraElement& x) {
  if (x.degree != ga.n) throw Error("top_coefficient: wrong degree");
  AlgebraElement c = normal_form(ga, x);
  if (c.coords.empty()) return Scalar(0);
  return c.coords[0].second / ga.top_unit;
}

Matrix group_action(const GradedAlgebra& ga, const std::vector<int>& label_perm, int d) {
  const DegreeData& dd = ga.deg[d];
  const int dim = static_cast<int>(dd.basis.size());
  Matrix m = Matrix::Constant(dim, dim, Scalar(0));
  for (int j = 0; j < dim; ++j) {
    const Expo& e = dd.monomials[dd.basis[j]];
    Expo img(e.size(), 0);
    for (size_t l = 0; l < e.size(); ++l) {
      if (e[l]) img[label_perm[l]] = e[l];
    }
    auto it = dd.index.find(img);
    if (it == dd.index.end()) throw Error("group_action: permutation does not preserve the complex");
    AlgebraElement x;
    x.degree = d;
    x.coords.emplace_back(it->second, Scalar(1));
    m.col(j) = basis_coords(ga, x);
  }
  return m;
}

std::vector<Scalar> graded_character(const GradedAlgebra& ga, const std::vector<int>& label_perm) {
  std::vector<Scalar> traces;
  for (int d = 0; d <= ga.n; ++d) {
    const DegreeData& dd = ga.deg[d];
    Scalar tr(0);
    for (size_t j = 0; j < dd.basis.size(); ++j) {
      const Expo& e = dd.monomials[dd.basis[j]];
      Expo img(e.size(), 0);
      for (size_t l = 0; l < e.size(); ++l) {
        if (e[l]) img[label_perm[l]] = e[l];
      }
      auto it = dd.index.find(img);
      if (it == dd.index.end()) throw Error("graded_character: permutation does not preserve the complex");
      AlgebraElement x;
      x.degree = d;
      x.coords.emplace_back(it->second, Scalar(1));
      x = normal_form(ga, x);
      for (const auto& [col, val] : x.coords) {
        if (col == dd.basis[j]) tr += val;
      }
    }
    traces.push_back(std::move(tr));
  }
  return traces;
}

Matrix invariant_basis(const GradedAlgebra& ga, const std::vector<std::vector<int>>& label_perms,
                       int d) {
  const int dim = ga.dims[d];
  if (label_perms.empty()) throw Error("invariant_basis: empty group");
  Matrix avg = Matrix::Constant(dim, dim, Scalar(0));
  for (const auto& perm : label_perms) avg += group_action(ga, perm, d);
  avg /= Scalar(static_cast<int>(label_perms.size()));
  RrefResult rr = rref(avg.transpose());
  Matrix basis(rr.rank, dim);
  for (int i = 0; i < rr.rank; ++i) basis.row(i) = rr.reduced.row(i);
  return basis;
}

Matrix pairing_matrix(const GradedAlgebra& ga, int d) {
  if (d < 0 || d > ga.n) throw Error("pairing_matrix: degree out of range");
  const DegreeData& da = ga.deg[d];
  const DegreeData& db = ga.deg[ga.n - d];
  Matrix m(static_cast<Eigen::Index>(da.basis.size()), static_cast<Eigen::Index>(db.basis.size()));
  for (size_t i = 0; i < da.basis.size(); ++i) {
    AlgebraElement x;
    x.degree = d;
    x.coords.emplace_back(da.basis[i], Scalar(1));
    for (size_t j = 0; j < db.basis.size(); ++j) {
      AlgebraElement y;
      y.degree = ga.n - d;
      y.coords.emplace_back(db.basis[j], Scalar(1));
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          top_coefficient(ga, multiply(ga, x, y));
    }
  }
  return m;
}

bool pd_check(const GradedAlgebra& ga) {
  for (int d = 0; d <= ga.n; ++d) {
    if (ga.dims[d] != ga.dims[ga.n - d]) return false;
    Matrix m = pairing_matrix(ga, d);
    if (rref(std::move(m)).rank != ga.dims[d]) return false;
  }
  return true;
}

bool vertex_monomial_consistency(const GradedAlgebra& ga) {
  for (const auto& labels : ga.fc.vertex_labels) {
    Expo e(ga.fc.nlabels, 0);
    for (int l : labels) e[l] = 1;
    AlgebraElement vm = normal_form(ga, monomial_element(ga, e));
    if (vm.coords.size() != 1 || vm.coords[0].first != ga.top_monomial) return false;
    if ((vm.coords[0].second / ga.top_unit).sign() <= 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> minimal_nonfaces(const FaceComplex& fc, int max_size) {
  std::vector<std::vector<int>> result;
  const int m = fc.nlabels;
  std::vector<std::vector<char>> pair_face(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    pair_face[i][i] = 1;
    for (int j = i + 1; j < m; ++j) {
      const bool f = !bitset_empty(bitset_and(fc.label_bits[i], fc.label_bits[j]));
      pair_face[i][j] = pair_face[j][i] = f ? 1 : 0;
      if (!f) result.push_back({i, j});
    }
  }

  std::vector<int> stack;
  std::function<void(const Bitset&)> extend = [&](const Bitset& common) {
    if (static_cast<int>(stack.size()) >= max_size) return;
    const int last = stack.back();
    for (int l = last + 1; l < m; ++l) {
      bool clique = true;
      for (int s : stack) {
        if (!pair_face[s][l]) { clique = false; break; }
      }
      if (!clique) continue;
      Bitset meet = bitset_and(common, fc.label_bits[l]);
      if (bitset_empty(meet)) {
        // candidate minimal non-face: every (size-1)-subset must be a face
        stack.push_back(l);
        bool minimal = true;
        for (size_t drop = 0; drop + 1 < stack.size() && minimal; ++drop) {
          std::vector<int> sub;
          for (size_t i = 0; i < stack.size(); ++i) {
            if (i != drop) sub.push_back(stack[i]);
          }
          if (!fc.face(sub)) minimal = false;
        }
        if (minimal) result.push_back(stack);
        stack.pop_back();
      } else {
        stack.push_back(l);
        extend(meet);
        stack.pop_back();
      }
    }
  };
  for (int i = 0; i < m; ++i) {
    stack = {i};
    extend(fc.label_bits[i]);
  }

  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

} // namespace wtoric
