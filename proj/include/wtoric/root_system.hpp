#ifndef WTORIC_ROOT_SYSTEM_HPP
#define WTORIC_ROOT_SYSTEM_HPP

#include "wtoric/linalg.hpp"

#include <string>
#include <vector>

namespace wtoric {

// Supported irreducible types: A1-A4, B2-B4, C3-C4, D4, F4, G2, I2(5), H3.
// Vectors live in the simple root basis, so the i-th simple root is the
// i-th standard basis vector and all inner products go through the Gram form.
struct RootSystem {
  std::string label;
  int rank = 0;
  std::int64_t disc = 1;
  bool crystallographic = true;
  GramForm gram;
  std::vector<Vector> simple_roots;
  std::vector<Vector> roots;                 // closure under simple reflections, BFS order
  std::vector<Matrix> simple_reflections;    // r_1, ..., r_n acting on root coordinates
};

extern const int kDefaultRankCap;

RootSystem build_root_system(const std::string& label, int rank_cap = kDefaultRankCap);

// Matrix of the reflection across the hyperplane normal to alpha.
// alpha must belong to rs.roots.
Matrix reflection(const RootSystem& rs, const Vector& alpha);

// Index of v in rs.roots, or -1.
int root_index(const RootSystem& rs, const Vector& v);

// Pairing vector (<v, alpha_1>, ..., <v, alpha_n>) = G v.
Vector pairings(const RootSystem& rs, const Vector& v);

bool is_dominant(const RootSystem& rs, const Vector& v);
bool is_strictly_dominant(const RootSystem& rs, const Vector& v);

// Root coordinates of sum c_i * omega_i, where omega_i are the fundamental
// weights (<omega_i, alpha_j^vee> = delta_ij). Dominance of the result is
// coordinate-wise non-negativity of c.
Vector weight_coords_to_root_coords(const RootSystem& rs, const std::vector<Scalar>& c);

} // namespace wtoric

#endif
