#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "burnside/caps.hpp"
#include "burnside/group.hpp"

namespace burnside {

// One conjugacy class of subgroups of the ambient group. The representative is
// the class member whose sorted element list is lexicographically smallest
// among all conjugates.
struct SubgroupClass {
  PermutationGroup representative;
  int64_t order = 1;
  int64_t normalizer_order = 1;
  std::string label;  // "o<order>_c<index>", index global in the sorted table

  // Internal lookup data: sorted packed elements of the representative and the
  // bucket key (order + element cycle-type multiset) shared by all conjugates.
  std::vector<uint64_t> sorted_elements;
  std::string bucket;
};

// Conjugacy classes of subgroups of a fixed ambient group plus the table of
// marks. Classes are sorted by (order, cycle-type multiset, minimal conjugate
// element list); marks[r][c] counts the points of ambient/rep(r) fixed by
// rep(c), which makes the matrix lower triangular with positive diagonal.
class SubgroupTable {
 public:
  SubgroupTable(std::shared_ptr<const PermutationGroup> ambient,
                std::vector<SubgroupClass> classes, std::vector<std::vector<int64_t>> marks,
                Caps caps);
  // Movable (the memo mutex is recreated); single-owner moves only happen
  // before the table is shared.
  SubgroupTable(SubgroupTable&& o) noexcept
      : ambient_(std::move(o.ambient_)),
        classes_(std::move(o.classes_)),
        marks_(std::move(o.marks_)),
        caps_(o.caps_),
        class_memo_(std::move(o.class_memo_)),
        product_memo_(std::move(o.product_memo_)) {}
  SubgroupTable(const SubgroupTable&) = delete;
  SubgroupTable& operator=(const SubgroupTable&) = delete;

  const PermutationGroup& ambient() const { return *ambient_; }
  const std::shared_ptr<const PermutationGroup>& ambient_ptr() const { return ambient_; }
  int num_classes() const { return static_cast<int>(classes_.size()); }
  const SubgroupClass& cls(int r) const { return classes_[static_cast<size_t>(r)]; }
  const std::vector<SubgroupClass>& classes() const { return classes_; }
  const std::vector<std::vector<int64_t>>& marks() const { return marks_; }
  int64_t mark(int r, int c) const { return marks_[static_cast<size_t>(r)][static_cast<size_t>(c)]; }
  const Caps& caps() const { return caps_; }

  int trivial_class_index() const { return 0; }
  // The class of the full group: the ring identity [G/G].
  int identity_class_index() const { return num_classes() - 1; }

  // Conjugacy class of a concrete subgroup of the ambient group. Memoized by
  // element set; thread-safe.
  int class_index_of(const PermutationGroup& h) const;

  // Lazy cache for basis products, keyed by (min(r,c), max(r,c)).
  const std::vector<int64_t>* cached_product(int r, int c) const;
  void store_product(int r, int c, std::vector<int64_t> coeffs) const;

 private:
  std::shared_ptr<const PermutationGroup> ambient_;
  std::vector<SubgroupClass> classes_;
  std::vector<std::vector<int64_t>> marks_;
  Caps caps_;

  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::string, int> class_memo_;
  mutable std::unordered_map<uint64_t, std::vector<int64_t>> product_memo_;
};

using TablePtr = std::shared_ptr<const SubgroupTable>;

// Full conjugacy-class enumeration: seeds all cyclic subgroups, then closes
// bottom-up by extending each class representative with prime-power-order
// elements taken up to normalizer conjugacy.
SubgroupTable enumerate_subgroup_classes(std::shared_ptr<const PermutationGroup> ambient,
                                         const Caps& caps);

// Bucket key used to pre-filter conjugacy tests: subgroup order plus the
// multiset of element cycle types.
std::string subgroup_bucket_key(const PermutationGroup& h);

// marks[r][c] = #{cosets x*rep(r) fixed by rep(c)} = #{reps x : x^-1 rep(c) x
// <= rep(r)}. Requires sorted_elements and representative generators.
std::vector<std::vector<int64_t>> compute_marks(const PermutationGroup& ambient,
                                                const std::vector<SubgroupClass>& classes);

}  // namespace burnside
