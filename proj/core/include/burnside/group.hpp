#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

// A concrete finite permutation group with an explicit, canonically ordered
// element list. Elements are listed breadth-first from the identity over the
// (sorted, deduplicated) generator set, each BFS layer sorted lexicographically
// by image sequence; the order therefore does not depend on how the generators
// were passed in, only on the generated set.
class PermutationGroup {
 public:
  static PermutationGroup closure(int degree, std::vector<Permutation> generators);
  static PermutationGroup symmetric(int degree);
  static PermutationGroup trivial(int degree);
  // Validates that `elements` is closed under composition and contains the
  // identity, then rebuilds the canonical order from a derived generating set.
  static PermutationGroup from_elements(int degree, std::vector<Permutation> elements);

  int degree() const { return degree_; }
  int64_t order() const { return static_cast<int64_t>(elements_.size()); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  const std::vector<uint64_t>& packed_elements() const { return packed_; }

  bool contains(const Permutation& p) const;
  bool contains_packed(uint64_t p) const;
  // -1 when absent.
  int element_index(const Permutation& p) const;
  int element_index_packed(uint64_t p) const;
  bool is_subgroup_of(const PermutationGroup& g) const;
  bool same_elements(const PermutationGroup& g) const;

  // BFS decomposition: element i equals element(parent) * generator(gen);
  // the identity has (-1, -1). Lets group actions apply arbitrary elements
  // from generator data alone.
  std::pair<int, int> word_step(int i) const { return words_[static_cast<size_t>(i)]; }

 private:
  PermutationGroup() = default;
  static PermutationGroup build(int degree, std::vector<uint64_t> gens);

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
  std::vector<uint64_t> packed_;
  std::vector<std::pair<int, int>> words_;
  std::unordered_map<uint64_t, int> index_;
};

using GroupPtr = std::shared_ptr<const PermutationGroup>;

// First g in G's canonical element order with g H1 g^-1 = H2, if any.
// H1, H2 must be subgroups of G.
std::optional<Permutation> conjugating_witness(const PermutationGroup& g,
                                               const PermutationGroup& h1,
                                               const PermutationGroup& h2);
bool are_conjugate(const PermutationGroup& g, const PermutationGroup& h1,
                   const PermutationGroup& h2);

PermutationGroup normalizer(const PermutationGroup& g, const PermutationGroup& h);

// The block subgroup S_i x S_j inside S_{i+j}: the first factor permutes
// {0..i-1}, the second {i..i+j-1}.
PermutationGroup young_embedding(int i, int j);

// Cyclic group generated by the canonical permutation with consecutive cycles
// of the given lengths ((2,1) -> <(0 1)> inside degree 3).
PermutationGroup cyclic_from_cycle_type(const CycleType& t);
Permutation canonical_permutation(const CycleType& t);

}  // namespace burnside
