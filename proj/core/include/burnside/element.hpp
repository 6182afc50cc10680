#pragma once

#include <cstdint>
#include <vector>

#include "burnside/gset.hpp"
#include "burnside/subgroup_table.hpp"

namespace burnside {

class Ctx;

// Integer vector over the subgroup classes of a fixed ambient group: an
// element of the Burnside ring in the transitive basis. Effective elements
// (all coefficients >= 0) are exactly the classes of honest group sets.
class BurnsideElement {
 public:
  explicit BurnsideElement(TablePtr table);  // zero
  static BurnsideElement zero(TablePtr table);
  static BurnsideElement one(TablePtr table);  // the class of a single fixed point
  static BurnsideElement basis(TablePtr table, int class_index);
  static BurnsideElement constant(TablePtr table, int64_t k);

  const SubgroupTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  int64_t coeff(int class_index) const { return coeffs_[static_cast<size_t>(class_index)]; }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_effective() const;

  BurnsideElement& operator+=(const BurnsideElement& o);
  BurnsideElement& operator-=(const BurnsideElement& o);
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) {
    a += b;
    return a;
  }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) {
    a -= b;
    return a;
  }
  BurnsideElement operator-() const;
  BurnsideElement operator*(const BurnsideElement& o) const;
  BurnsideElement operator*(int64_t k) const;
  friend BurnsideElement operator*(int64_t k, const BurnsideElement& x) { return x * k; }
  bool operator==(const BurnsideElement& o) const;

  // Fixed-point count of the virtual set at a subgroup: the ghost coordinate.
  int64_t mark_at_class(int class_index) const;
  int64_t mark_at(const PermutationGroup& h) const;
  int64_t augmentation() const { return mark_at_class(table_->trivial_class_index()); }

 private:
  void check_same_table(const BurnsideElement& o) const;

  TablePtr table_;
  std::vector<int64_t> coeffs_;
};

// Orbit decomposition of a concrete set: coefficient of a class counts the
// orbits whose point stabilizers lie in it.
BurnsideElement from_gset(Ctx& ctx, const GSet& s);

// Linear extension of [H/K] -> [G/K]; x lives over a subgroup of g.
BurnsideElement induce_b(Ctx& ctx, const GroupPtr& g, const BurnsideElement& x);

// Basis coset spaces decomposed as h-sets; a ring homomorphism.
BurnsideElement restrict_b(Ctx& ctx, const GroupPtr& h, const BurnsideElement& x);

// Pairing over the block product group: [G/A] x [H/B] -> [(GxH)/(AxB)] with
// the second factor shifted past the degree of the first.
BurnsideElement outer_young(Ctx& ctx, const BurnsideElement& x, const BurnsideElement& y);

// Independent oracle for basis products: sum over double cosets HgK of
// [G/(H cap gKg^-1)].
BurnsideElement double_coset_product(const TablePtr& table, const PermutationGroup& h,
                                     const PermutationGroup& k);

// The block product group of the ambient groups of two tables (first factor
// on low points, second shifted), interned through ctx.
GroupPtr block_product_group(Ctx& ctx, const PermutationGroup& a, const PermutationGroup& b);

}  // namespace burnside
