#include "wtoric/weyl_group.hpp"

#include <algorithm>
#include <set>

namespace wtoric {

namespace {

std::vector<int> root_permutation(const RootSystem& rs, const Matrix& m) {
  std::vector<int> perm(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) {
    const int idx = root_index(rs, m * rs.roots[r]);
    if (idx < 0) throw Error("group element does not permute the roots");
    perm[r] = idx;
  }
  return perm;
}

} // namespace

int WeylGroup::simple(int k) const {
  std::vector<int> perm = root_permutation(rs, rs.simple_reflections[k]);
  auto it = index_of_perm.find(perm);
  if (it == index_of_perm.end()) throw Error("simple reflection missing from group");
  return it->second;
}

int WeylGroup::compose(int i, int j) const {
  const std::vector<int>& pi = elements[i].root_perm;
  const std::vector<int>& pj = elements[j].root_perm;
  std::vector<int> p(pi.size());
  for (size_t r = 0; r < p.size(); ++r) p[r] = pi[pj[r]];
  auto it = index_of_perm.find(p);
  if (it == index_of_perm.end()) throw Error("composition left the group");
  return it->second;
}

WeylGroup generate_group(const RootSystem& rs, std::size_t cap) {
  WeylGroup wg;
  wg.rs = rs;
  const int n = rs.rank;

  std::vector<std::vector<int>> gen_perm(n);
  for (int k = 0; k < n; ++k) gen_perm[k] = root_permutation(rs, rs.simple_reflections[k]);

  GroupElement id;
  id.mat = Matrix::Identity(n, n);
  id.root_perm.resize(rs.roots.size());
  for (size_t r = 0; r < rs.roots.size(); ++r) id.root_perm[r] = static_cast<int>(r);
  wg.index_of_perm.emplace(id.root_perm, 0);
  wg.elements.push_back(std::move(id));

  for (size_t head = 0; head < wg.elements.size(); ++head) {
    for (int k = 0; k < n; ++k) {
      // new = w o r_k, permutation composed accordingly
      std::vector<int> perm(wg.elements[head].root_perm.size());
      for (size_t r = 0; r < perm.size(); ++r) perm[r] = wg.elements[head].root_perm[gen_perm[k][r]];
      auto [it, fresh] = wg.index_of_perm.emplace(std::move(perm), static_cast<int>(wg.elements.size()));
      if (!fresh) continue;
      if (wg.elements.size() >= cap) throw Error("group size safety cap exceeded");
      GroupElement e;
      e.mat = wg.elements[head].mat * rs.simple_reflections[k];
      e.root_perm = it->first;
      e.word = wg.elements[head].word;
      e.word.push_back(k);
      wg.elements.push_back(std::move(e));
    }
  }

  for (size_t i = 0; i < wg.elements.size(); ++i) {
    const std::vector<int>& p = wg.elements[i].root_perm;
    std::vector<int> inv(p.size());
    for (size_t r = 0; r < p.size(); ++r) inv[p[r]] = static_cast<int>(r);
    auto it = wg.index_of_perm.find(inv);
    if (it == wg.index_of_perm.end()) throw Error("inverse missing from group");
    wg.elements[i].inverse = it->second;
  }
  return wg;
}

Parabolic parabolic_subgroup(const WeylGroup& wg, std::vector<int> K) {
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  for (int k : K) {
    if (k < 0 || k >= wg.rs.rank) throw Error("parabolic: generator index out of range");
  }
  std::set<int> members = {wg.identity()};
  std::vector<int> queue = {wg.identity()};
  std::vector<int> gens;
  for (int k : K) gens.push_back(wg.simple(k));
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int g : gens) {
      const int next = wg.compose(queue[head], g);
      if (members.insert(next).second) queue.push_back(next);
    }
  }
  Parabolic sub;
  sub.K = std::move(K);
  sub.element_indices.assign(members.begin(), members.end());
  return sub;
}

std::vector<Vector> orbit(const WeylGroup& wg, const Parabolic& sub, const Vector& v) {
  std::vector<Vector> out;
  for (int e : sub.element_indices) {
    Vector img = wg.apply(e, v);
    bool known = false;
    for (const Vector& u : out) {
      if (vec_eq(u, img)) { known = true; break; }
    }
    if (!known) out.push_back(std::move(img));
  }
  return out;
}

std::vector<int> stabilizer_in(const WeylGroup& wg, const Parabolic& sub,
                               const std::function<bool(int)>& fixes) {
  std::vector<int> stab;
  for (int e : sub.element_indices) {
    if (fixes(e)) stab.push_back(e);
  }
  (void)wg;
  return stab;
}

std::vector<int> coset_reps(const WeylGroup& wg, const Parabolic& sub,
                            const std::vector<int>& stab) {
  const std::set<int> stab_set(stab.begin(), stab.end());
  std::vector<int> reps;
  for (int s : sub.element_indices) {
    bool seen = false;
    for (int r : reps) {
      if (stab_set.count(wg.compose(wg.inverse(r), s))) { seen = true; break; }
    }
    if (!seen) reps.push_back(s);
  }
  return reps;
}

std::vector<int> word_support(const WeylGroup& wg, int element) {
  std::set<int> supp(wg.elements[element].word.begin(), wg.elements[element].word.end());
  return {supp.begin(), supp.end()};
}

} // namespace wtoric
