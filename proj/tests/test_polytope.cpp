#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wtoric/polytope.hpp"

using namespace wtoric;

namespace {

struct Built {
  RootSystem rs;
  WeylGroup wg;
  WPolytope p;
};

Built make(const std::string& label, const std::vector<std::vector<int>>& weights) {
  Built b;
  b.rs = build_root_system(label);
  b.wg = generate_group(b.rs);
  std::vector<Vector> lambdas;
  for (const auto& w : weights) {
    std::vector<Scalar> c;
    for (int x : w) c.emplace_back(x);
    lambdas.push_back(weight_coords_to_root_coords(b.rs, c));
  }
  b.p = build_w_polytope(b.rs, b.wg, lambdas);
  return b;
}

Scalar pairing_with(const RootSystem& rs, const Vector& normal, const Vector& x) {
  return inner_product(normal, x, rs.gram);
}

std::vector<int> all_k(int rank) {
  std::vector<int> k(rank);
  for (int i = 0; i < rank; ++i) k[i] = i;
  return k;
}

} // namespace

TEST_CASE("hexagon") {
  Built b = make("A2", {{1, 1}});
  CHECK(b.p.vertices.size() == 6);
  CHECK(b.p.facets.size() == 6);
  CHECK(b.p.nondegenerate);
  CHECK(b.p.simple);
  CHECK(b.p.flag);
  CHECK(b.p.fvec == std::vector<long long>({1, 6, 6}));
  CHECK(b.p.hvec == std::vector<long long>({1, 4, 1}));
}

TEST_CASE("pentagon is degenerate simple flag") {
  Built b = make("I2(5)", {{1, 0}});
  CHECK(b.p.vertices.size() == 5);
  CHECK(b.p.facets.size() == 5);
  CHECK(!b.p.nondegenerate);
  CHECK(b.p.simple);
  CHECK(b.p.flag);
  CHECK(b.p.fvec == std::vector<long long>({1, 5, 5}));
  CHECK(b.p.hvec == std::vector<long long>({1, 3, 1}));
}

TEST_CASE("triangle is not flag") {
  Built b = make("A2", {{1, 0}});
  CHECK(b.p.vertices.size() == 3);
  CHECK(b.p.facets.size() == 3);
  CHECK(!b.p.nondegenerate);
  CHECK(b.p.simple);
  CHECK(!b.p.flag);  // three pairwise intersecting edges, no common vertex
}

TEST_CASE("B2 octagon") {
  Built b = make("B2", {{1, 1}});
  CHECK(b.p.vertices.size() == 8);
  CHECK(b.p.facets.size() == 8);
  CHECK(b.p.nondegenerate);
  CHECK(b.p.simple);
  CHECK(b.p.flag);
  CHECK(b.p.hvec == std::vector<long long>({1, 6, 1}));
}

TEST_CASE("A3 permutohedron") {
  Built b = make("A3", {{1, 1, 1}});
  CHECK(b.p.vertices.size() == 24);
  CHECK(b.p.facets.size() == 14);
  CHECK(b.p.fvec == std::vector<long long>({1, 14, 36, 24}));
  CHECK(b.p.hvec == std::vector<long long>({1, 11, 11, 1}));
  CHECK(b.p.simple);
  CHECK(b.p.flag);
}

TEST_CASE("B3 permutohedron counts") {
  Built b = make("B3", {{1, 1, 1}});
  CHECK(b.p.vertices.size() == 48);
  CHECK(b.p.facets.size() == 26);
  CHECK(b.p.hvec == std::vector<long long>({1, 23, 23, 1}));
  CHECK(b.p.simple);
}

TEST_CASE("rank one segment") {
  Built b = make("A1", {{1}});
  CHECK(b.p.vertices.size() == 2);
  CHECK(b.p.facets.size() == 2);
  CHECK(b.p.fvec == std::vector<long long>({1, 2}));
  CHECK(b.p.hvec == std::vector<long long>({1, 1}));
}

TEST_CASE("build errors") {
  RootSystem rs = build_root_system("A2");
  WeylGroup wg = generate_group(rs);
  // not dominant
  Vector bad = weight_coords_to_root_coords(rs, {Scalar(1), Scalar(1)});
  bad = -bad;
  CHECK_THROWS_AS(build_w_polytope(rs, wg, {bad}), Error);
  // lambda inside the hull of the other orbit is not a vertex
  Vector inner = weight_coords_to_root_coords(rs, {Scalar(1), Scalar(1)});
  Vector outer = weight_coords_to_root_coords(rs, {Scalar(3), Scalar(3)});
  CHECK_THROWS_AS(build_w_polytope(rs, wg, {inner, outer}), Error);
  // degenerate (lower-dimensional) hull
  Vector zero = Vector::Constant(2, Scalar(0));
  CHECK_THROWS_AS(build_w_polytope(rs, wg, {zero}), Error);
}

TEST_CASE("supporting data is exact") {
  Built b = make("B2", {{2, 1}});
  for (const Facet& f : b.p.facets) {
    CHECK(f.offset.sign() > 0);  // origin interior
    for (size_t v = 0; v < b.p.vertices.size(); ++v) {
      const Scalar val = pairing_with(b.rs, f.normal, b.p.vertices[v]);
      if (bitset_get(f.vbits, v)) {
        CHECK(val == f.offset);
      } else {
        CHECK(val < f.offset);
      }
    }
  }
}

TEST_CASE("facet normal equivariance") {
  for (const char* label : {"A2", "I2(5)", "B3"}) {
    Built b = make(label, {std::vector<int>(build_root_system(label).rank, 1)});
    for (int e = 0; e < b.wg.order(); ++e) {
      for (size_t fi = 0; fi < b.p.facets.size(); ++fi) {
        const int img = b.p.facet_perm[e][fi];
        CHECK(vec_eq((b.wg.elements[e].mat * b.p.facets[fi].normal).eval(),
                     b.p.facets[img].normal));
      }
    }
  }
}

TEST_CASE("intersection criterion and orthogonality (non-degenerate rank <= 3)") {
  for (const char* label : {"A2", "B2", "A3", "B3"}) {
    Built b = make(label, {std::vector<int>(build_root_system(label).rank, 1)});
    for (size_t fi = 0; fi < b.p.facets.size(); ++fi) {
      for (const Vector& alpha : b.rs.roots) {
        // F meets H_alpha iff r_alpha preserves F
        bool meets = false;
        for (int v : b.p.facets[fi].vertices) {
          // some point of F on H_alpha: check a vertex or the barycenter
          if (inner_product(b.p.vertices[v], alpha, b.rs.gram).is_zero()) meets = true;
        }
        const Vector bary = facet_barycenter(b.p, static_cast<int>(fi));
        // For non-degenerate P a facet meets H_alpha iff the reflection
        // fixes it, iff the hyperplane passes through its barycenter.
        const bool bary_on = inner_product(bary, alpha, b.rs.gram).is_zero();
        const Matrix refl = reflection(b.rs, alpha);
        std::vector<int> img;
        for (int v : b.p.facets[fi].vertices) {
          img.push_back(b.p.vertex_id(refl * b.p.vertices[v]));
        }
        std::sort(img.begin(), img.end());
        const bool preserved = img == b.p.facets[fi].vertices;
        CHECK(preserved == bary_on);
        if (meets) CHECK(preserved);
        if (preserved) {
          CHECK(inner_product(b.p.facets[fi].normal, alpha, b.rs.gram).is_zero());
        }
      }
    }
  }
}

TEST_CASE("stabilizer dichotomy for non-degenerate polytopes") {
  Built b = make("B3", {{1, 1, 1}});
  const std::vector<int> K = {0, 2};
  const Parabolic sub = parabolic_subgroup(b.wg, K);
  const FacetOrbits fo = facet_orbits(b.p, b.wg, K);
  for (int rep : fo.reps) {
    for (int e : sub.element_indices) {
      const int img = b.p.facet_perm[e][rep];
      if (img == rep) continue;
      const Bitset meet = bitset_and(b.p.facets[rep].vbits, b.p.facets[img].vbits);
      CHECK(bitset_empty(meet));  // s(F) and F share nothing or coincide
    }
  }
}

TEST_CASE("facet orbits on the hexagon") {
  Built b = make("A2", {{1, 1}});
  FacetOrbits fo = facet_orbits(b.p, b.wg, {0, 1});
  CHECK(fo.reps.size() == 2);
  for (size_t r = 0; r < fo.reps.size(); ++r) {
    CHECK(fo.stabilizers[r].size() == 2);
    CHECK(fo.cosets[r].size() == 3);
  }
  // labels form a bijection onto the six facets
  std::set<int> covered;
  for (const auto& row : fo.facet_of) covered.insert(row.begin(), row.end());
  CHECK(covered.size() == 6);

  // K = empty: every facet its own representative
  FacetOrbits triv = facet_orbits(b.p, b.wg, {});
  CHECK(triv.reps.size() == 6);
  for (size_t r = 0; r < triv.reps.size(); ++r) {
    CHECK(triv.stabilizers[r].size() == 1);
    CHECK(triv.cosets[r].size() == 1);
  }
}

TEST_CASE("facet orbits on the pentagon") {
  Built b = make("I2(5)", {{1, 0}});
  FacetOrbits fo = facet_orbits(b.p, b.wg, {0, 1});
  CHECK(fo.reps.size() == 1);
  CHECK(fo.stabilizers[0].size() == 2);
  CHECK(fo.stabilizers[0][0] == b.wg.identity());
  CHECK(fo.stabilizers[0][1] == b.wg.simple(0));  // {e, r_1}
  CHECK(fo.cosets[0].size() == 5);
}

TEST_CASE("quotient of the hexagon by the full group") {
  Built b = make("A2", {{1, 1}});
  QuotientPolytope q = quotient_polytope(b.p, b.rs, {0, 1});
  CHECK(q.vertices.size() == 4);
  CHECK(q.facets.size() == 4);
  CHECK(q.simple);
  CHECK(q.flag);
  CHECK(q.fvec == std::vector<long long>({1, 4, 4}));
  CHECK(q.hvec == std::vector<long long>({1, 2, 1}));
  int xcount = 0, ycount = 0;
  for (const QuotientFacet& f : q.facets) {
    (f.is_wall ? ycount : xcount)++;
    if (f.is_wall) {
      // Y facet k lies in the wall: <v, alpha_k> = 0 on its vertices
      for (int v : f.vertices) {
        CHECK(inner_product(q.vertices[v], b.rs.simple_roots[f.source], b.rs.gram).is_zero());
      }
    }
  }
  CHECK(xcount == 2);
  CHECK(ycount == 2);
}

TEST_CASE("quotient of the pentagon is the orange triangle") {
  Built b = make("I2(5)", {{1, 0}});
  QuotientPolytope q = quotient_polytope(b.p, b.rs, {0, 1});
  CHECK(q.vertices.size() == 3);
  CHECK(q.facets.size() == 3);
  CHECK(q.hvec == std::vector<long long>({1, 1, 1}));
  int xcount = 0;
  for (const QuotientFacet& f : q.facets) {
    if (!f.is_wall) ++xcount;
  }
  CHECK(xcount == 1);
}

TEST_CASE("quotient with K empty is the polytope itself") {
  Built b = make("B2", {{1, 1}});
  QuotientPolytope q = quotient_polytope(b.p, b.rs, {});
  CHECK(q.vertices.size() == b.p.vertices.size());
  CHECK(q.facets.size() == b.p.facets.size());
  for (const QuotientFacet& f : q.facets) CHECK(!f.is_wall);
}

TEST_CASE("simplicity transfer") {
  {
    Built b = make("A2", {{1, 1}});
    CHECK(simplicity_transfer_check(b.rs, b.p, {0, 1}));
  }
  {
    Built b = make("I2(5)", {{1, 0}});
    CHECK(simplicity_transfer_check(b.rs, b.p, {0, 1}));
  }
  {
    Built b = make("B3", {{1, 1, 1}});
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> K;
      for (int k = 0; k < 3; ++k) {
        if (mask & (1 << k)) K.push_back(k);
      }
      CHECK(simplicity_transfer_check(b.rs, b.p, K));
      QuotientPolytope q = quotient_polytope(b.p, b.rs, K);
      CHECK(q.simple);
      CHECK(q.flag);  // flag transfer for flag non-degenerate P
    }
  }
}

TEST_CASE("two point hulls used by the sweeps are simple with all vertices") {
  {
    Built b = make("A2", {{2, 1}, {1, 2}});
    CHECK(b.p.vertices.size() == 12);
    CHECK(b.p.simple);
  }
  {
    Built b = make("B3", {{2, 1, 1}, {1, 1, 2}});
    CHECK(b.p.vertices.size() == 96);
    CHECK(b.p.simple);
  }
}

TEST_CASE("rescale normals validates input") {
  Built b = make("A2", {{1, 1}});
  const int rep = b.p.facets[0].orbit_rep;
  CHECK_THROWS_AS(rescale_normals(b.p, {{rep, Scalar(-1)}}), Error);
  WPolytope scaled = rescale_normals(b.p, {{rep, Scalar(3)}});
  for (size_t f = 0; f < b.p.facets.size(); ++f) {
    if (b.p.facets[f].orbit_rep == rep) {
      CHECK(scaled.facets[f].offset == Scalar(3) * b.p.facets[f].offset);
    } else {
      CHECK(scaled.facets[f].offset == b.p.facets[f].offset);
    }
  }
}

TEST_CASE("degenerate quotients in rank 2 across walls") {
  for (const char* label : {"A2", "B2", "G2"}) {
    for (int wall = 0; wall < 2; ++wall) {
      std::vector<std::vector<int>> w = {{wall == 0 ? 0 : 1, wall == 0 ? 1 : 0}};
      Built b = make(label, w);
      CHECK(!b.p.nondegenerate);
      for (int mask = 0; mask < 4; ++mask) {
        std::vector<int> K;
        for (int k = 0; k < 2; ++k) {
          if (mask & (1 << k)) K.push_back(k);
        }
        CHECK_NOTHROW(facet_orbits(b.p, b.wg, K));
        CHECK_NOTHROW(quotient_polytope(b.p, b.rs, K));
      }
    }
  }
}

TEST_CASE("f vector machinery against the quotient corner cube") {
  // B3 singleton, K = S: the chamber slice of a generic permutohedron is a
  // combinatorial cube.
  Built b = make("B3", {{1, 1, 1}});
  QuotientPolytope q = quotient_polytope(b.p, b.rs, all_k(3));
  CHECK(q.vertices.size() == 8);
  CHECK(q.facets.size() == 6);
  CHECK(q.fvec == std::vector<long long>({1, 6, 12, 8}));
  CHECK(q.hvec == std::vector<long long>({1, 3, 3, 1}));
}
