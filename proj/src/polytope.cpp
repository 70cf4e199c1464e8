#include "wtoric/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace wtoric {

Bitset bitset_make(std::size_t n) { return Bitset((n + 63) / 64, 0); }
void bitset_set(Bitset& b, std::size_t i) { b[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
bool bitset_get(const Bitset& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1; }

Bitset bitset_and(const Bitset& a, const Bitset& b) {
  Bitset r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool bitset_empty(const Bitset& b) {
  for (std::uint64_t w : b)
    if (w) return false;
  return true;
}

int bitset_count(const Bitset& b) {
  int c = 0;
  for (std::uint64_t w : b) c += __builtin_popcountll(w);
  return c;
}

namespace {

Scalar dot(const Vector& covector, const Vector& x) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < covector.size(); ++i) {
    if (!covector(i).is_zero() && !x(i).is_zero()) acc += covector(i) * x(i);
  }
  return acc;
}

struct RawFacet {
  std::vector<int> verts;  // ascending ids; all input points on the hyperplane
  Vector f;                // supporting covector, f.x <= c on the hull
  Scalar c;
};

std::vector<int> tight_set(const std::vector<Vector>& pts, const Vector& f, const Scalar& c) {
  std::vector<int> out;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (dot(f, pts[i]) == c) out.push_back(static_cast<int>(i));
  }
  return out;
}

int affine_rank_all(const std::vector<Vector>& pts) {
  std::vector<int> ids(pts.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
  return affine_rank(pts, ids);
}

// Second supporting functional through the affine hull of `flat`, oriented so
// that interior_ref lies strictly below it. Used to rotate a hyperplane about
// a ridge (or to grow a seed face).
struct Rotation {
  Vector g;
  Scalar level;
};

Rotation rotation_functional(const std::vector<Vector>& pts, const std::vector<int>& flat,
                             const Vector& f, int interior_ref) {
  const Vector& p0 = pts[flat[0]];
  Matrix d(static_cast<Eigen::Index>(flat.size()) - 1, p0.size());
  for (size_t i = 1; i < flat.size(); ++i) {
    d.row(static_cast<Eigen::Index>(i - 1)) = (pts[flat[i]] - p0).transpose();
  }
  std::vector<Vector> ker =
      flat.size() == 1 ? kernel_basis(Matrix::Constant(1, p0.size(), Scalar(0))) : kernel_basis(d);
  Vector g;
  bool found = false;
  for (const Vector& cand : ker) {
    Matrix pair(2, p0.size());
    pair.row(0) = f.transpose();
    pair.row(1) = cand.transpose();
    if (rref(std::move(pair)).rank == 2) {
      g = cand;
      found = true;
      break;
    }
  }
  if (!found) throw Error("hull: no independent rotation functional");
  Scalar level = dot(g, p0);
  const Scalar ref = dot(g, pts[interior_ref]);
  if (ref == level) throw Error("hull: rotation reference lies on the flat");
  if (ref > level) {
    g = -g;
    level = -level;
  }
  return {std::move(g), std::move(level)};
}

// Rotate (f, c) about the flat to the next supporting hyperplane. Every
// hyperplane through the flat is b*f + a*g projectively; the candidate
// point v gives (a_v, b_v) = (c - f.v, g.v - level), and v comes earlier in
// the rotation exactly when a_u * b_v - a_v * b_u < 0 for every other u --
// which is also the statement that its hyperplane supports the point set.
std::pair<Vector, Scalar> pivot(const std::vector<Vector>& pts, const Vector& f, const Scalar& c,
                                const Rotation& rot) {
  bool have = false;
  Scalar best_a(0), best_b(0);
  for (size_t i = 0; i < pts.size(); ++i) {
    const Scalar a = c - dot(f, pts[i]);
    if (a.sign() <= 0) continue;  // on the current hyperplane
    const Scalar b = dot(rot.g, pts[i]) - rot.level;
    if (!have || (best_a * b - a * best_b).sign() > 0) {
      best_a = a;
      best_b = b;
      have = true;
    }
  }
  if (!have) throw Error("hull: pivot found no points off the facet");
  Vector nf = best_b * f + best_a * rot.g;
  Scalar nc = best_b * c + best_a * rot.level;
  return {std::move(nf), std::move(nc)};
}

// Local affine coordinates of a subset of points (origin = first id).
std::vector<Vector> localize(const std::vector<Vector>& pts, const std::vector<int>& ids) {
  const Vector& p0 = pts[ids[0]];
  Matrix d(static_cast<Eigen::Index>(ids.size()), p0.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    d.row(static_cast<Eigen::Index>(i)) = (pts[ids[i]] - p0).transpose();
  }
  RrefResult rr = rref(d);
  Matrix basis_t(p0.size(), rr.rank);  // columns = basis directions
  for (int r = 0; r < rr.rank; ++r) {
    basis_t.col(r) = rr.reduced.row(r).transpose();
  }
  std::vector<Vector> local;
  local.reserve(ids.size());
  for (size_t i = 0; i < ids.size(); ++i) {
    auto xi = solve(basis_t, pts[ids[i]] - p0);
    if (!xi) throw Error("hull: localization failed");
    local.push_back(std::move(*xi));
  }
  return local;
}

std::vector<RawFacet> gift_wrap(const std::vector<Vector>& pts);

// Facets of the (d-1)-polytope spanned by the given subset, as id lists into pts.
std::vector<std::vector<int>> sub_facets(const std::vector<Vector>& pts,
                                         const std::vector<int>& ids) {
  std::vector<Vector> local = localize(pts, ids);
  std::vector<RawFacet> fs = gift_wrap(local);
  std::vector<std::vector<int>> out;
  out.reserve(fs.size());
  for (const RawFacet& rf : fs) {
    std::vector<int> verts;
    verts.reserve(rf.verts.size());
    for (int v : rf.verts) verts.push_back(ids[v]);
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

std::vector<RawFacet> gift_wrap(const std::vector<Vector>& pts) {
  const int dim = static_cast<int>(pts[0].size());
  if (affine_rank_all(pts) != dim) throw Error("hull: points do not span the ambient space");

  if (dim == 1) {
    int lo = 0, hi = 0;
    for (size_t i = 1; i < pts.size(); ++i) {
      if (pts[i](0) < pts[lo](0)) lo = static_cast<int>(i);
      if (pts[i](0) > pts[hi](0)) hi = static_cast<int>(i);
    }
    Vector plus = Vector::Constant(1, Scalar(1));
    Vector minus = Vector::Constant(1, Scalar(-1));
    return {RawFacet{{hi}, plus, pts[hi](0)}, RawFacet{{lo}, minus, -pts[lo](0)}};
  }

  // Seed: support along the first coordinate, then rotate until the tight
  // set spans a hyperplane.
  Vector f = Vector::Constant(dim, Scalar(0));
  f(0) = Scalar(1);
  Scalar c = dot(f, pts[0]);
  for (size_t i = 1; i < pts.size(); ++i) {
    const Scalar v = dot(f, pts[i]);
    if (v > c) c = v;
  }
  std::vector<int> tight = tight_set(pts, f, c);
  while (affine_rank(pts, tight) < dim - 1) {
    int off = -1;
    for (size_t i = 0; i < pts.size(); ++i) {
      if (dot(f, pts[i]) != c) { off = static_cast<int>(i); break; }
    }
    if (off < 0) throw Error("hull: all points tight on a seed hyperplane");
    Rotation rot = rotation_functional(pts, tight, f, off);
    auto [nf, nc] = pivot(pts, f, c, rot);
    f = std::move(nf);
    c = std::move(nc);
    tight = tight_set(pts, f, c);
  }

  std::map<std::vector<int>, RawFacet> facets;
  std::vector<const std::vector<int>*> queue;
  auto push_facet = [&](std::vector<int> verts, Vector ff, Scalar cc) {
    auto [it, fresh] = facets.emplace(std::move(verts), RawFacet{});
    if (!fresh) return;
    if (affine_rank(pts, it->first) != dim - 1) {
      throw Error("hull: supporting set is not a facet");
    }
    it->second.verts = it->first;
    it->second.f = std::move(ff);
    it->second.c = std::move(cc);
    queue.push_back(&it->first);
  };
  push_facet(tight, f, c);

  std::set<std::vector<int>> ridges_done;
  for (size_t head = 0; head < queue.size(); ++head) {
    const RawFacet cur = facets.at(*queue[head]);  // copy; map grows below
    std::vector<std::vector<int>> ridges;
    if (dim == 2) {
      // A facet of a polygon is a segment; its ridges are the two endpoints
      // of the tight set along the edge line.
      std::vector<Vector> local = localize(pts, cur.verts);
      int lo = 0, hi = 0;
      for (size_t i = 1; i < local.size(); ++i) {
        if (local[i](0) < local[lo](0)) lo = static_cast<int>(i);
        if (local[i](0) > local[hi](0)) hi = static_cast<int>(i);
      }
      ridges.push_back({cur.verts[lo]});
      ridges.push_back({cur.verts[hi]});
    } else {
      ridges = sub_facets(pts, cur.verts);
    }
    for (std::vector<int>& ridge : ridges) {
      if (!ridges_done.insert(ridge).second) continue;
      int interior_ref = -1;
      std::set<int> on_ridge(ridge.begin(), ridge.end());
      for (int v : cur.verts) {
        if (!on_ridge.count(v)) { interior_ref = v; break; }
      }
      if (interior_ref < 0) throw Error("hull: ridge equals facet");
      Rotation rot = rotation_functional(pts, ridge, cur.f, interior_ref);
      auto [nf, nc] = pivot(pts, cur.f, cur.c, rot);
      std::vector<int> verts = tight_set(pts, nf, nc);
      push_facet(std::move(verts), std::move(nf), std::move(nc));
    }
  }

  std::vector<RawFacet> out;
  out.reserve(facets.size());
  for (auto& [verts, rf] : facets) out.push_back(rf);
  return out;
}

Vector barycenter_of(const std::vector<Vector>& vertices, const std::vector<int>& ids) {
  Vector b = Vector::Constant(vertices[ids[0]].size(), Scalar(0));
  for (int id : ids) b += vertices[id];
  return b / Scalar(static_cast<int>(ids.size()));
}

bool in_chamber(const RootSystem& rs, const Vector& v, const std::vector<int>& K) {
  const Vector p = pairings(rs, v);
  for (int k : K) {
    if (p(k).sign() < 0) return false;
  }
  return true;
}

Vector canonical_rep_covector(const RootSystem& rs, const Vector& raw_covector,
                              NormalScaling scaling) {
  if (!rs.crystallographic && scaling != NormalScaling::FieldCanonical) {
    scaling = NormalScaling::FieldCanonical;
  }
  switch (scaling) {
    case NormalScaling::FieldCanonical:
      return raw_covector / Scalar(vector_content(raw_covector));
    case NormalScaling::RootDualPrimitive: {
      for (Eigen::Index i = 0; i < raw_covector.size(); ++i) {
        if (!raw_covector(i).is_rational()) throw Error("normal scaling: irrational covector");
      }
      return raw_covector / Scalar(vector_content(raw_covector));
    }
    case NormalScaling::WeightDualPrimitive: {
      auto normal = solve(rs.gram.g, raw_covector);
      if (!normal) throw Error("normal scaling: Gram system inconsistent");
      Vector coroot_coords(rs.rank);
      for (int j = 0; j < rs.rank; ++j) {
        coroot_coords(j) = (*normal)(j)*rs.gram.g(j, j) / Scalar(2);
        if (!coroot_coords(j).is_rational()) throw Error("normal scaling: irrational coroot data");
      }
      return raw_covector / Scalar(vector_content(coroot_coords));
    }
  }
  throw Error("normal scaling: unknown mode");
}

void check_supporting_exactly(const WPolytope& p) {
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const Facet& f = p.facets[fi];
    for (size_t v = 0; v < p.vertices.size(); ++v) {
      const Scalar val = dot(f.covector, p.vertices[v]);
      const bool on = bitset_get(f.vbits, v);
      if (on && val != f.offset) throw Error("facet equality violated on its vertex set");
      if (!on && !(val < f.offset)) throw Error("facet inequality violated off its vertex set");
    }
  }
}

// All-cliques walk of the facet intersection graph; false iff some pairwise
// intersecting family has no common vertex.
bool flag_property(const std::vector<Bitset>& vbits) {
  const int m = static_cast<int>(vbits.size());
  std::vector<std::vector<int>> adj(m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!bitset_empty(bitset_and(vbits[i], vbits[j]))) {
        adj[i].push_back(j);
      }
    }
  }
  struct Walker {
    const std::vector<Bitset>& vbits;
    const std::vector<std::vector<int>>& adj;
    bool ok = true;
    void extend(const std::vector<int>& cand, const Bitset& common) {
      if (!ok) return;
      for (size_t a = 0; a < cand.size() && ok; ++a) {
        const int j = cand[a];
        Bitset next = bitset_and(common, vbits[j]);
        if (bitset_empty(next)) {
          ok = false;
          return;
        }
        std::vector<int> narrowed;
        const std::vector<int>& nj = adj[j];
        for (size_t b = a + 1; b < cand.size(); ++b) {
          if (std::binary_search(nj.begin(), nj.end(), cand[b])) narrowed.push_back(cand[b]);
        }
        extend(narrowed, next);
      }
    }
  } w{vbits, adj};
  for (int i = 0; i < m && w.ok; ++i) {
    w.extend(adj[i], vbits[i]);
  }
  return w.ok;
}

} // namespace

int WPolytope::vertex_id(const Vector& v) const {
  VecLexLess less;
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v, less);
  if (it != vertices.end() && vec_eq(*it, v)) return static_cast<int>(it - vertices.begin());
  return -1;
}

WPolytope build_w_polytope(const RootSystem& rs, const WeylGroup& wg,
                           const std::vector<Vector>& lambdas, NormalScaling scaling) {
  if (lambdas.empty()) throw Error("build_w_polytope: empty lambda set");
  for (const Vector& l : lambdas) {
    if (!is_dominant(rs, l)) throw Error("build_w_polytope: lambda is not dominant");
  }

  WPolytope p;
  p.dim = rs.rank;
  p.lambdas = lambdas;

  std::set<Vector, VecLexLess> points;
  for (const Vector& l : lambdas) {
    for (const GroupElement& e : wg.elements) points.insert(e.mat * l);
  }
  p.vertices.assign(points.begin(), points.end());

  if (affine_rank_all(p.vertices) != p.dim) {
    throw Error("build_w_polytope: hull is not full-dimensional");
  }

  std::vector<RawFacet> raw = gift_wrap(p.vertices);

  // Vertex test: the supporting covectors at a hull vertex span V.
  {
    std::vector<std::vector<int>> at(p.vertices.size());
    for (size_t fi = 0; fi < raw.size(); ++fi) {
      for (int v : raw[fi].verts) at[v].push_back(static_cast<int>(fi));
    }
    for (size_t v = 0; v < p.vertices.size(); ++v) {
      Matrix m(static_cast<Eigen::Index>(at[v].size()), p.dim);
      for (size_t i = 0; i < at[v].size(); ++i) {
        m.row(static_cast<Eigen::Index>(i)) = raw[at[v][i]].f.transpose();
      }
      if (at[v].empty() || rref(std::move(m)).rank != p.dim) {
        throw Error("build_w_polytope: an orbit point is not a vertex of the hull");
      }
    }
  }

  p.facets.resize(raw.size());
  for (size_t fi = 0; fi < raw.size(); ++fi) {
    Facet& f = p.facets[fi];
    f.vertices = raw[fi].verts;
    f.vbits = bitset_make(p.vertices.size());
    for (int v : f.vertices) bitset_set(f.vbits, v);
    f.covector = raw[fi].f;  // provisional; rescaled per orbit below
  }

  // Group action on vertices and facets.
  std::map<std::vector<int>, int> facet_by_verts;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    facet_by_verts.emplace(p.facets[fi].vertices, static_cast<int>(fi));
  }
  p.vertex_perm.resize(wg.order());
  p.facet_perm.resize(wg.order());
  for (int e = 0; e < wg.order(); ++e) {
    std::vector<int>& vp = p.vertex_perm[e];
    vp.resize(p.vertices.size());
    for (size_t v = 0; v < p.vertices.size(); ++v) {
      const int img = p.vertex_id(wg.elements[e].mat * p.vertices[v]);
      if (img < 0) throw Error("build_w_polytope: group does not permute the vertices");
      vp[v] = img;
    }
    std::vector<int>& fp = p.facet_perm[e];
    fp.resize(p.facets.size());
    for (size_t fi = 0; fi < p.facets.size(); ++fi) {
      std::vector<int> img;
      img.reserve(p.facets[fi].vertices.size());
      for (int v : p.facets[fi].vertices) img.push_back(vp[v]);
      std::sort(img.begin(), img.end());
      auto it = facet_by_verts.find(img);
      if (it == facet_by_verts.end()) {
        throw Error("build_w_polytope: group does not permute the facets");
      }
      fp[fi] = it->second;
    }
  }

  // W-orbits of facets; representative = the facet with dominant barycenter.
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    if (p.facets[fi].orbit_rep >= 0) continue;
    std::set<int> members;
    for (int e = 0; e < wg.order(); ++e) members.insert(p.facet_perm[e][fi]);
    int rep = -1;
    for (int fj : members) {
      const Vector b = barycenter_of(p.vertices, p.facets[fj].vertices);
      if (is_dominant(rs, b)) {
        if (rep >= 0) throw Error("build_w_polytope: two dominant barycenters in one facet orbit");
        rep = fj;
      }
    }
    if (rep < 0) throw Error("build_w_polytope: facet orbit without dominant barycenter");
    // canonical normal on the representative, then translate along the orbit
    const Vector cov = canonical_rep_covector(rs, p.facets[rep].covector, scaling);
    auto normal = solve(rs.gram.g, cov);
    if (!normal) throw Error("build_w_polytope: Gram system inconsistent");
    for (int e = 0; e < wg.order(); ++e) {
      const int img = p.facet_perm[e][rep];
      if (p.facets[img].orbit_rep < 0) {
        p.facets[img].orbit_rep = rep;
        p.facets[img].normal = wg.elements[e].mat * (*normal);
        p.facets[img].covector = rs.gram.g * p.facets[img].normal;
      }
    }
    // the stabilizer of the representative must fix its normal
    for (int e = 0; e < wg.order(); ++e) {
      if (p.facet_perm[e][rep] == rep && !vec_eq(wg.elements[e].mat * (*normal), *normal)) {
        throw Error("build_w_polytope: facet stabilizer moves the normal");
      }
    }
  }

  for (Facet& f : p.facets) {
    f.offset = dot(f.covector, p.vertices[f.vertices[0]]);
    if (f.offset.sign() <= 0) throw Error("build_w_polytope: origin is not interior");
  }
  check_supporting_exactly(p);

  p.vertex_facets.resize(p.vertices.size());
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    for (int v : p.facets[fi].vertices) p.vertex_facets[v].push_back(static_cast<int>(fi));
  }

  const PolytopeClass cls = classify(rs, p);
  p.nondegenerate = cls.nondegenerate;
  p.simple = cls.simple;
  p.flag = cls.flag;

  std::vector<Bitset> fb;
  fb.reserve(p.facets.size());
  for (const Facet& f : p.facets) fb.push_back(f.vbits);
  p.fvec = f_vector(p.vertices, fb, p.dim);
  p.hvec = h_vector_from_f(p.fvec, p.dim);
  return p;
}

PolytopeClass classify(const RootSystem& rs, const WPolytope& p) {
  PolytopeClass c;
  c.nondegenerate = true;
  for (const Vector& l : p.lambdas) {
    if (!is_strictly_dominant(rs, l)) c.nondegenerate = false;
  }
  c.simple = true;
  for (const auto& vf : p.vertex_facets) {
    if (static_cast<int>(vf.size()) != p.dim) c.simple = false;
  }
  std::vector<Bitset> fb;
  fb.reserve(p.facets.size());
  for (const Facet& f : p.facets) fb.push_back(f.vbits);
  c.flag = flag_property(fb);
  return c;
}

std::vector<long long> f_vector(const std::vector<Vector>& vertices,
                                const std::vector<Bitset>& facet_bits, int dim) {
  std::map<Bitset, int> faces;  // vertex set -> codim (filled later)
  std::vector<const Bitset*> queue;
  auto push = [&](const Bitset& b) {
    if (bitset_empty(b)) return;
    auto [it, fresh] = faces.emplace(b, -1);
    if (fresh) queue.push_back(&it->first);
  };
  for (const Bitset& b : facet_bits) push(b);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Bitset cur = *queue[head];
    for (const Bitset& b : facet_bits) push(bitset_and(cur, b));
  }

  std::vector<long long> f(dim + 1, 0);
  f[0] = 1;  // the polytope itself
  for (auto& [bits, codim] : faces) {
    std::vector<int> ids;
    for (size_t v = 0; v < vertices.size(); ++v) {
      if (bitset_get(bits, v)) ids.push_back(static_cast<int>(v));
    }
    const int r = affine_rank(vertices, ids);
    codim = dim - r;
    if (codim < 1 || codim > dim) throw Error("f_vector: face of impossible codimension");
    f[codim] += 1;
  }
  return f;
}

std::vector<long long> h_vector_from_f(const std::vector<long long>& f, int dim) {
  auto binom = [](int n, int k) -> long long {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  std::vector<long long> h(dim + 1, 0);
  for (int j = 0; j <= dim; ++j) {
    long long acc = 0;
    for (int i = 0; i <= j; ++i) {
      const long long sgn = ((j - i) % 2 == 0) ? 1 : -1;
      acc += sgn * f[i] * binom(dim - i, j - i);
    }
    h[j] = acc;
  }
  return h;
}

int FacetOrbits::rep_position(int facet_id) const {
  for (size_t r = 0; r < reps.size(); ++r) {
    if (reps[r] == facet_id) return static_cast<int>(r);
  }
  return -1;
}

FacetOrbits facet_orbits(const WPolytope& p, const WeylGroup& wg, const std::vector<int>& K) {
  FacetOrbits fo;
  fo.K = K;
  std::sort(fo.K.begin(), fo.K.end());
  fo.subgroup = parabolic_subgroup(wg, fo.K);

  const RootSystem& rs = wg.rs;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const Vector b = barycenter_of(p.vertices, p.facets[fi].vertices);
    if (in_chamber(rs, b, fo.K)) fo.reps.push_back(static_cast<int>(fi));
  }

  fo.label_of.assign(p.facets.size(), {-1, -1});
  for (size_t r = 0; r < fo.reps.size(); ++r) {
    const int rep = fo.reps[r];
    std::vector<int> stab, cosets, facet_ids;
    for (int e : fo.subgroup.element_indices) {
      const int img = p.facet_perm[e][rep];
      if (img == rep) stab.push_back(e);
      bool seen = false;
      for (int fid : facet_ids) {
        if (fid == img) { seen = true; break; }
      }
      if (!seen) {
        if (fo.label_of[img].first >= 0) {
          throw Error("facet_orbits: facet labeled twice (degenerate case outside supported scope)");
        }
        fo.label_of[img] = {static_cast<int>(r), static_cast<int>(cosets.size())};
        cosets.push_back(e);
        facet_ids.push_back(img);
      }
    }
    if (fo.subgroup.order() != static_cast<int>(stab.size() * cosets.size())) {
      throw Error("facet_orbits: orbit-stabilizer mismatch");
    }
    fo.stabilizers.push_back(std::move(stab));
    fo.cosets.push_back(std::move(cosets));
    fo.facet_of.push_back(std::move(facet_ids));
  }

  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    if (fo.label_of[fi].first < 0) {
      throw Error("facet_orbits: facet missed by the labeling (degenerate case outside supported scope)");
    }
  }
  return fo;
}

QuotientPolytope quotient_polytope(const WPolytope& p, const RootSystem& rs,
                                   const std::vector<int>& K) {
  std::vector<int> walls = K;
  std::sort(walls.begin(), walls.end());
  walls.erase(std::unique(walls.begin(), walls.end()), walls.end());
  for (int k : walls) {
    if (k < 0 || k >= rs.rank) throw Error("quotient_polytope: wall index out of range");
  }
  const int n = p.dim;

  QuotientPolytope q;
  q.dim = n;

  // Wall covectors: <alpha_k, x> >= 0  <=>  -(G x)_k <= 0.
  std::vector<Vector> wall_cov;
  for (int k : walls) wall_cov.push_back((-rs.gram.g.row(k)).transpose());

  auto feasible = [&](const Vector& x) {
    for (const Facet& f : p.facets) {
      if (dot(f.covector, x) > f.offset) return false;
    }
    for (const Vector& wc : wall_cov) {
      if (dot(wc, x).sign() > 0) return false;
    }
    return true;
  };

  std::set<Vector, VecLexLess> verts;
  for (const Vector& v : p.vertices) {
    if (feasible(v)) verts.insert(v);
  }

  // Vertices involving at least one wall: solve every n-subset mixing
  // facet constraints (with a common P-vertex) and wall constraints.
  const int nw = static_cast<int>(walls.size());
  std::vector<int> wall_pick;
  std::vector<int> facet_pick;
  auto try_system = [&]() {
    Matrix a(n, n);
    Vector b(n);
    int row = 0;
    for (int fi : facet_pick) {
      a.row(row) = p.facets[fi].covector.transpose();
      b(row) = p.facets[fi].offset;
      ++row;
    }
    for (int wi : wall_pick) {
      a.row(row) = wall_cov[wi].transpose();
      b(row) = Scalar(0);
      ++row;
    }
    RrefResult rr = rref(a);
    if (rr.rank != n) return;
    auto x = solve(a, b);
    if (x && feasible(*x)) verts.insert(*x);
  };
  std::function<void(int, int, Bitset)> pick_facets = [&](int start, int need, Bitset common) {
    if (need == 0) {
      try_system();
      return;
    }
    for (int fi = start; fi < static_cast<int>(p.facets.size()); ++fi) {
      Bitset next = bitset_and(common, p.facets[fi].vbits);
      if (bitset_empty(next)) continue;
      facet_pick.push_back(fi);
      pick_facets(fi + 1, need - 1, std::move(next));
      facet_pick.pop_back();
    }
  };
  std::function<void(int, int)> pick_walls = [&](int start, int need) {
    if (need == 0) {
      const int fneed = n - static_cast<int>(wall_pick.size());
      Bitset all = bitset_make(p.vertices.size());
      for (auto& w : all) w = ~std::uint64_t{0};
      if (fneed == 0) {
        try_system();
      } else {
        pick_facets(0, fneed, std::move(all));
      }
      return;
    }
    for (int wi = start; wi < nw; ++wi) {
      wall_pick.push_back(wi);
      pick_walls(wi + 1, need - 1);
      wall_pick.pop_back();
    }
  };
  for (int j = 1; j <= std::min(nw, n); ++j) pick_walls(0, j);

  q.vertices.assign(verts.begin(), verts.end());
  if (affine_rank_all(q.vertices) != n) {
    throw Error("quotient_polytope: quotient is not full-dimensional");
  }

  // Facets by tight sets of the constraints.
  auto tight_ids = [&](const Vector& cov, const Scalar& off) {
    std::vector<int> ids;
    for (size_t v = 0; v < q.vertices.size(); ++v) {
      if (dot(cov, q.vertices[v]) == off) ids.push_back(static_cast<int>(v));
    }
    return ids;
  };

  std::vector<int> expected_reps;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    const Vector b = barycenter_of(p.vertices, p.facets[fi].vertices);
    if (in_chamber(rs, b, walls)) expected_reps.push_back(static_cast<int>(fi));
  }

  std::vector<int> x_sources;
  for (size_t fi = 0; fi < p.facets.size(); ++fi) {
    std::vector<int> ids = tight_ids(p.facets[fi].covector, p.facets[fi].offset);
    if (ids.empty() || affine_rank(q.vertices, ids) != n - 1) continue;
    QuotientFacet f;
    f.vertices = ids;
    f.is_wall = false;
    f.source = static_cast<int>(fi);
    f.normal = p.facets[fi].normal;
    f.offset = p.facets[fi].offset;
    q.facets.push_back(std::move(f));
    x_sources.push_back(static_cast<int>(fi));
  }
  if (x_sources != expected_reps) {
    throw Error("quotient_polytope: facet labels do not match the expected representatives");
  }
  for (int wi = 0; wi < nw; ++wi) {
    std::vector<int> ids = tight_ids(wall_cov[wi], Scalar(0));
    if (ids.empty() || affine_rank(q.vertices, ids) != n - 1) {
      throw Error("quotient_polytope: wall is not a facet of the quotient");
    }
    QuotientFacet f;
    f.vertices = ids;
    f.is_wall = true;
    f.source = walls[wi];
    f.normal = -rs.simple_roots[walls[wi]];
    f.offset = Scalar(0);
    q.facets.push_back(std::move(f));
  }

  q.vertex_facets.resize(q.vertices.size());
  for (size_t fi = 0; fi < q.facets.size(); ++fi) {
    QuotientFacet& f = q.facets[fi];
    f.vbits = bitset_make(q.vertices.size());
    for (int v : f.vertices) {
      bitset_set(f.vbits, v);
      q.vertex_facets[v].push_back(static_cast<int>(fi));
    }
  }

  q.simple = true;
  for (const auto& vf : q.vertex_facets) {
    if (static_cast<int>(vf.size()) != n) q.simple = false;
  }
  std::vector<Bitset> fb;
  fb.reserve(q.facets.size());
  for (const QuotientFacet& f : q.facets) fb.push_back(f.vbits);
  q.flag = flag_property(fb);
  q.fvec = f_vector(q.vertices, fb, n);
  q.hvec = h_vector_from_f(q.fvec, n);
  return q;
}

bool simplicity_transfer_check(const RootSystem& rs, const WPolytope& p,
                               const std::vector<int>& K) {
  const QuotientPolytope q = quotient_polytope(p, rs, K);
  if (p.nondegenerate) return p.simple == q.simple;
  if (p.dim == 3 && p.simple) return q.simple;
  return true;
}

WPolytope rescale_normals(const WPolytope& p,
                          const std::vector<std::pair<int, Scalar>>& orbit_scale) {
  std::map<int, Scalar> by_rep;
  for (const auto& [rep, s] : orbit_scale) {
    if (s.sign() <= 0) throw Error("rescale_normals: scaling must be positive");
    if (!by_rep.emplace(rep, s).second) throw Error("rescale_normals: duplicate orbit key");
  }
  WPolytope out = p;
  for (Facet& f : out.facets) {
    auto it = by_rep.find(f.orbit_rep);
    if (it == by_rep.end()) continue;
    f.normal *= it->second;
    f.covector *= it->second;
    f.offset *= it->second;
  }
  return out;
}

Vector facet_barycenter(const WPolytope& p, int facet_id) {
  return barycenter_of(p.vertices, p.facets[facet_id].vertices);
}

} // namespace wtoric
