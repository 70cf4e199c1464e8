#ifndef WTORIC_POLYTOPE_HPP
#define WTORIC_POLYTOPE_HPP

#include "wtoric/weyl_group.hpp"

#include <cstdint>
#include <vector>

namespace wtoric {

// How the representative normal of each W-orbit of facets is scaled.
//   RootDualPrimitive:   pairings <l, alpha_i> integral with gcd 1
//                        (primitive in the lattice dual to the root lattice)
//   WeightDualPrimitive: coroot coordinates integral with gcd 1
//                        (primitive in the lattice dual to the weight lattice)
//   FieldCanonical:      content 1 over Q(sqrt(d)); the only choice when the
//                        type is not crystallographic
// Every other facet in the orbit gets the translated normal w(l_rep), which
// keeps l equivariant under the whole group.
enum class NormalScaling { RootDualPrimitive, WeightDualPrimitive, FieldCanonical };

using Bitset = std::vector<std::uint64_t>;

Bitset bitset_make(std::size_t n);
void bitset_set(Bitset& b, std::size_t i);
bool bitset_get(const Bitset& b, std::size_t i);
Bitset bitset_and(const Bitset& a, const Bitset& b);
bool bitset_empty(const Bitset& b);
int bitset_count(const Bitset& b);

struct Facet {
  std::vector<int> vertices;  // ascending vertex ids
  Bitset vbits;
  Vector normal;              // outward, root coordinates
  Vector covector;            // gram * normal; entry i is <normal, alpha_i>
  Scalar offset;              // <normal, x> <= offset on the polytope
  int orbit_rep = -1;         // facet id of the W-orbit representative
};

struct WPolytope {
  int dim = 0;
  std::vector<Vector> vertices;  // ascending lexicographic order
  std::vector<Facet> facets;     // ascending by vertex list
  std::vector<std::vector<int>> vertex_facets;
  std::vector<Vector> lambdas;
  bool nondegenerate = false, simple = false, flag = false;
  std::vector<long long> fvec, hvec;
  // per group element: induced permutations of vertices and facets
  std::vector<std::vector<int>> vertex_perm;
  std::vector<std::vector<int>> facet_perm;

  int vertex_id(const Vector& v) const;  // -1 if absent
};

struct PolytopeClass {
  bool nondegenerate = false, simple = false, flag = false;
};

// P = conv(W(Lambda)) with exact facets, incidence, classification and
// W-equivariant normals. Lambda entries must be dominant and vertices of
// the hull; the hull must be full-dimensional.
WPolytope build_w_polytope(const RootSystem& rs, const WeylGroup& wg,
                           const std::vector<Vector>& lambdas,
                           NormalScaling scaling = NormalScaling::RootDualPrimitive);

PolytopeClass classify(const RootSystem& rs, const WPolytope& p);

// Face counts by codimension from the face lattice: f[0] = 1 (the polytope),
// f[1] = #facets, ..., f[n] = #vertices. Input is any vertex/facet incidence.
std::vector<long long> f_vector(const std::vector<Vector>& vertices,
                                const std::vector<Bitset>& facet_bits, int dim);
std::vector<long long> h_vector_from_f(const std::vector<long long>& f, int dim);

// Representatives, stabilizers and coset labels of the W_K-action on facets.
struct FacetOrbits {
  std::vector<int> K;
  Parabolic subgroup;
  std::vector<int> reps;                        // facet ids, ascending
  std::vector<std::vector<int>> stabilizers;    // per rep: W element indices
  std::vector<std::vector<int>> cosets;         // per rep: coset representatives
  std::vector<std::vector<int>> facet_of;       // facet_of[r][c] = facet id of cosets[r][c](reps[r])
  std::vector<std::pair<int, int>> label_of;    // facet id -> (rep position, coset position)

  int rep_position(int facet_id) const;         // -1 if facet_id is not a representative
};

FacetOrbits facet_orbits(const WPolytope& p, const WeylGroup& wg, const std::vector<int>& K);

struct QuotientFacet {
  std::vector<int> vertices;
  Bitset vbits;
  bool is_wall = false;
  int source = -1;  // P facet id, or the wall index k
  Vector normal;
  Scalar offset;
};

// P cap C_K with labeled facets: X labels first (ascending source facet id),
// then Y labels (ascending k). Construction checks the geometric facet set
// against the expected label set and errors on mismatch.
struct QuotientPolytope {
  int dim = 0;
  std::vector<Vector> vertices;
  std::vector<QuotientFacet> facets;
  std::vector<std::vector<int>> vertex_facets;
  bool simple = false, flag = false;
  std::vector<long long> fvec, hvec;
};

QuotientPolytope quotient_polytope(const WPolytope& p, const RootSystem& rs,
                                   const std::vector<int>& K);

// Property harness: simple(P) == simple(P/W_K) on non-degenerate input, and
// simple(P) => simple(P/W_K) in dimension 3.
bool simplicity_transfer_check(const RootSystem& rs, const WPolytope& p,
                               const std::vector<int>& K);

// Copy of p with each facet orbit's normals and offsets multiplied by a
// positive constant (keyed by orbit representative facet id).
WPolytope rescale_normals(const WPolytope& p,
                          const std::vector<std::pair<int, Scalar>>& orbit_scale);

Vector facet_barycenter(const WPolytope& p, int facet_id);

} // namespace wtoric

#endif
