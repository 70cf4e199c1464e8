#ifndef WTORIC_WEYL_GROUP_HPP
#define WTORIC_WEYL_GROUP_HPP

#include "wtoric/root_system.hpp"

#include <functional>
#include <map>
#include <vector>

namespace wtoric {

struct GroupElement {
  Matrix mat;                  // action on root coordinates
  std::vector<int> root_perm;  // induced permutation of rs.roots
  std::vector<int> word;       // one reduced word in simple reflections (0-based)
  int inverse = -1;
};

// The full finite reflection group, generated breadth-first over products
// with the simple reflections (generator order r_1 < r_2 < ...). Element 0
// is the identity; indices are BFS discovery order, so index order refines
// word length. Root permutations are faithful and serve as element keys.
struct WeylGroup {
  RootSystem rs;
  std::vector<GroupElement> elements;
  std::map<std::vector<int>, int> index_of_perm;

  int order() const { return static_cast<int>(elements.size()); }
  int identity() const { return 0; }
  int simple(int k) const;               // index of r_k
  int compose(int i, int j) const;       // index of w_i o w_j
  int inverse(int i) const { return elements[i].inverse; }
  Vector apply(int i, const Vector& v) const { return elements[i].mat * v; }
};

WeylGroup generate_group(const RootSystem& rs, std::size_t cap = 20000);

// Standard parabolic W_K, K a 0-based subset of the simple reflections.
// element_indices are ascending indices into wg.elements.
struct Parabolic {
  std::vector<int> K;
  std::vector<int> element_indices;
  int order() const { return static_cast<int>(element_indices.size()); }
};

Parabolic parabolic_subgroup(const WeylGroup& wg, std::vector<int> K);

// Deduplicated orbit of v under the subgroup, in first-discovery order
// (subgroup elements visited by ascending index).
std::vector<Vector> orbit(const WeylGroup& wg, const Parabolic& sub, const Vector& v);

// Elements of the subgroup satisfying the predicate; the caller promises the
// predicate cuts out a subgroup (a point or set stabilizer).
std::vector<int> stabilizer_in(const WeylGroup& wg, const Parabolic& sub,
                               const std::function<bool(int)>& fixes);

// One representative per left coset s * stab inside the subgroup, each the
// element of minimal index in its coset, in ascending order.
std::vector<int> coset_reps(const WeylGroup& wg, const Parabolic& sub,
                            const std::vector<int>& stab);

// Simple reflections appearing in the stored reduced word: the element's
// minimal parabolic support.
std::vector<int> word_support(const WeylGroup& wg, int element);

} // namespace wtoric

#endif
