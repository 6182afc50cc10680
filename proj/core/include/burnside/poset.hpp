#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "burnside/element.hpp"
#include "burnside/gset.hpp"

namespace burnside {

class Ctx;

// A carrier set with a strict partial order preserved by the group action.
// The constructor checks irreflexivity, transitivity, antisymmetry and
// equivariance and rejects violations.
class GPoset {
 public:
  GPoset(GSet carrier, const std::function<bool(int, int)>& strict_less);

  const GSet& carrier() const { return carrier_; }
  int64_t size() const { return carrier_.size(); }
  bool less(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * words_ + static_cast<size_t>(j) / 64] >>
            (static_cast<size_t>(j) % 64)) & 1ull;
  }
  // Points strictly above i, ascending.
  const std::vector<int>& above(int i) const { return above_[static_cast<size_t>(i)]; }

  std::vector<std::pair<int, int>> cover_relations() const;

 private:
  GSet carrier_;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<std::vector<int>> above_;
};

// Strictly increasing (j+1)-tuples with the componentwise action; tuples are
// indexed in lexicographic order. j = 0 recovers the carrier.
GSet chain_tuples(const GPoset& p, int j, const Caps& caps);

// Alternating sum over chain lengths of the chain-set classes.
BurnsideElement lefschetz_invariant(Ctx& ctx, const GPoset& p);
// lefschetz minus the class of a point; the empty poset gives -1.
BurnsideElement reduced_lefschetz(Ctx& ctx, const GPoset& p);

// Nonempty subsets of s with at most max_size elements, ordered by strict
// inclusion, encoded as bitmasks in ascending numeric order.
GPoset bounded_subset_poset(const GSet& s, int max_size, const Caps& caps);
// The bitmask list backing bounded_subset_poset's point indexing.
std::vector<uint64_t> bounded_subset_masks(int64_t base_size, int max_size);

// Pairs U <= V with U nonempty, |U| <= inner_max, |V| = outer_size, ordered
// by strict inclusion of U at equal V; points sorted by (V, U).
GPoset subset_flag_poset(const GSet& s, int inner_max, int outer_size, const Caps& caps);
std::vector<std::pair<uint64_t, uint64_t>> subset_flag_pairs(int64_t base_size, int inner_max,
                                                             int outer_size);

// Functions [n] -> {a, b, top} that are not constantly top, ordered pointwise
// with a < top and b < top, under the position action of the symmetric group.
// Point index = sum over x of digit(x)*3^x with a = 0, b = 1, top = 2.
GPoset two_label_poset(Ctx& ctx, int n);

GPoset opposite(const GPoset& p);

// Carrier induced along the inclusion; points are comparable only within one
// coset component, where the original order applies.
GPoset induce_poset(const GroupPtr& g, const GPoset& p, const Caps& caps);

// Equivariant order-isomorphism witness (point map p -> q), if one exists.
// Both posets must share the acting group.
std::optional<std::vector<int>> equivariant_poset_iso(const GPoset& p, const GPoset& q);

// Point maps f : p -> q as plain index vectors.
bool is_order_preserving(const GPoset& p, const GPoset& q, const std::vector<int>& f);
bool is_equivariant_map(const GPoset& p, const GPoset& q, const std::vector<int>& f);
std::vector<int> compose_maps(const std::vector<int>& f, const std::vector<int>& g);
// f(x) = x or f(x) < x for every x (resp. >): the homotopy-collapse hypothesis.
bool pointwise_below_identity(const GPoset& p, const std::vector<int>& f);
bool pointwise_above_identity(const GPoset& p, const std::vector<int>& f);

}  // namespace burnside
