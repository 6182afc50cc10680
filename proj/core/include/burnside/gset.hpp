#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnside/caps.hpp"
#include "burnside/group.hpp"

namespace burnside {

class Ctx;

// A finite set with a group action. Only one point map per group generator is
// stored; arbitrary elements act through the group's BFS word decomposition,
// keeping memory linear in the point count even for large chain sets.
class GSet {
 public:
  // generator_rows[k] is the point map of group->generators()[k]. Each row
  // must be a bijection of {0..size-1}.
  GSet(GroupPtr group, int64_t size, std::vector<std::vector<int>> generator_rows,
       std::string name, const Caps& caps);

  const PermutationGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int64_t size() const { return size_; }
  const std::string& name() const { return name_; }

  int apply_gen(int gen_index, int point) const {
    return rows_[static_cast<size_t>(gen_index)][static_cast<size_t>(point)];
  }
  int apply(int element_index, int point) const {
    while (element_index > 0) {
      const auto [parent, gen] = group_->word_step(element_index);
      point = rows_[static_cast<size_t>(gen)][static_cast<size_t>(point)];
      element_index = parent;
    }
    return point;
  }
  // p must be an element of group().
  int apply_perm(const Permutation& p, int point) const;

  int64_t fixed_count(int element_index) const;
  // Points fixed by every element of h; h must be a subgroup of group().
  int64_t fixed_by(const PermutationGroup& h) const;

  struct Orbit {
    int representative;  // least point of the orbit
    int64_t size;
  };
  // Orbits in ascending order of their least point.
  const std::vector<Orbit>& orbits() const { return orbits_; }

  PermutationGroup stabilizer(int point) const;

  // Action-axiom spot check: g(hx) = (gh)x on seeded random triples.
  // Row bijectivity is already enforced by the constructor.
  bool validate(int samples, uint64_t seed) const;

 private:
  GroupPtr group_;
  int64_t size_ = 0;
  std::vector<std::vector<int>> rows_;
  std::string name_;
  std::vector<Orbit> orbits_;
};

GSet natural_gset(const GroupPtr& g, const Caps& caps);
GSet trivial_gset(const GroupPtr& g, int64_t points, const Caps& caps);
GSet empty_gset(const GroupPtr& g, const Caps& caps);
GSet point_gset(const GroupPtr& g, const Caps& caps);
// Cosets of h, ordered by lexicographically smallest member.
GSet coset_gset(const GroupPtr& g, const PermutationGroup& h, const Caps& caps);
GSet regular_gset(const GroupPtr& g, const Caps& caps);

// Same points, action restricted to the subgroup h.
GSet restrict_gset(const GSet& s, const GroupPtr& h);
// Pairs (a, b) indexed a * |B| + b.
GSet product_gset(const GSet& a, const GSet& b, const Caps& caps);
// Points of a first, then points of b.
GSet disjoint_union_gset(const GSet& a, const GSet& b, const Caps& caps);
// k-element subsets encoded as bitmasks in ascending numeric order; |S| <= 63.
GSet subsets_gset(const GSet& s, int k, const Caps& caps);
// S plus one extra fixed point, appended last.
GSet adjoin_fixed_point(const GSet& s, const Caps& caps);

// Points start..start+len-1 of the natural action, renumbered to 0..len-1;
// every generator of g must map that range onto itself.
GSet block_points_gset(const GroupPtr& g, int start, int len, const Caps& caps);

// Carrier {(coset c, x)} indexed c * |S| + x, cosets of s.group() in g ordered
// by lexicographically smallest member. g acts by sigma * (c, x) =
// (c', h * x) where sigma * rep(c) = rep(c') * h with h in s.group().
GSet induce_gset(const GroupPtr& g, const GSet& s, const Caps& caps);

// Functions [i] -> S as a set over the block product group G x S_i (degree
// d + i); (g, sigma) * f = pos -> g * f(sigma^-1(pos)). Points are encoded in
// base |S| with f(0) as the most significant digit.
GSet power_gset(Ctx& ctx, const GSet& s, int i);

}  // namespace burnside
