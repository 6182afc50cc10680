#include <vector>

#include "burnside/ctx.hpp"
#include "burnside/element.hpp"
#include "doctest.h"

using namespace burnside;

namespace {

// Class index of a concrete subgroup inside the ambient table.
int class_of(const TablePtr& table, const PermutationGroup& h) {
  return table->class_index_of(h);
}

}  // namespace

TEST_CASE("ring structure over two points") {
  Ctx ctx;
  const TablePtr t = ctx.symmetric_table(2);
  const BurnsideElement one = BurnsideElement::one(t);
  const BurnsideElement line = BurnsideElement::basis(t, 0);  // free orbit

  CHECK(one * one == one);
  CHECK(line * one == line);
  CHECK(line * line == line * 2);
  CHECK((one + line) - line == one);
  CHECK((-line).coeff(0) == -1);
  CHECK(BurnsideElement::zero(t).is_zero());
  CHECK(BurnsideElement::constant(t, 3) == one * 3);
  CHECK(line.is_effective());
  CHECK_FALSE((one - line).is_effective());
}

TEST_CASE("products of transitive sets over three points") {
  Ctx ctx;
  const TablePtr t = ctx.symmetric_table(3);
  const PermutationGroup c2 = PermutationGroup::closure(3, {Permutation({1, 0, 2})});
  const PermutationGroup c3 = PermutationGroup::closure(3, {Permutation({1, 2, 0})});
  const BurnsideElement pts = BurnsideElement::basis(t, class_of(t, c2));
  const BurnsideElement sgn = BurnsideElement::basis(t, class_of(t, c3));
  const BurnsideElement reg = BurnsideElement::basis(t, t->trivial_class_index());

  // 3 x 3 points split into the diagonal and one free orbit.
  CHECK(pts * pts == pts + reg);
  // 2 x 2 points split into two copies of the 2-point set.
  CHECK(sgn * sgn == sgn * 2);
  // 3 x 2 points form one free orbit.
  CHECK(pts * sgn == reg);
  CHECK(reg * reg == reg * 6);

  // Marks multiply pointwise under the product.
  for (int c = 0; c < t->num_classes(); ++c)
    CHECK((pts * sgn).mark_at_class(c) == pts.mark_at_class(c) * sgn.mark_at_class(c));

  CHECK(pts.augmentation() == 3);
  CHECK(pts.mark_at(c2) == 1);
  CHECK(pts.mark_at(c3) == 0);
  CHECK((pts + BurnsideElement::constant(t, 2)).mark_at(c3) == 2);
}

TEST_CASE("ring product matches the double-coset oracle on every basis pair") {
  Ctx ctx;
  for (int n = 0; n <= 4; ++n) {
    const TablePtr t = ctx.symmetric_table(n);
    for (int r = 0; r < t->num_classes(); ++r)
      for (int c = 0; c < t->num_classes(); ++c) {
        const BurnsideElement lhs =
            BurnsideElement::basis(t, r) * BurnsideElement::basis(t, c);
        const BurnsideElement rhs = double_coset_product(
            t, t->cls(r).representative, t->cls(c).representative);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("induction of basis classes rewrites the subgroup in the larger group") {
  Ctx ctx;
  const GroupPtr s3 = ctx.symmetric(3);
  const GroupPtr c2 = ctx.intern(PermutationGroup::closure(3, {Permutation({1, 0, 2})}));
  const TablePtr tc2 = ctx.table(c2);
  const TablePtr ts3 = ctx.symmetric_table(3);

  const BurnsideElement ind_one = induce_b(ctx, s3, BurnsideElement::one(tc2));
  CHECK(ind_one == BurnsideElement::basis(ts3, class_of(ts3, *c2)));

  const BurnsideElement ind_reg =
      induce_b(ctx, s3, BurnsideElement::basis(tc2, tc2->trivial_class_index()));
  CHECK(ind_reg == BurnsideElement::basis(ts3, ts3->trivial_class_index()));

  // Induction scales the underlying cardinality by the index.
  const BurnsideElement x =
      BurnsideElement::one(tc2) * 2 - BurnsideElement::basis(tc2, tc2->trivial_class_index());
  CHECK(induce_b(ctx, s3, x).augmentation() == 3 * x.augmentation());
}

TEST_CASE("restriction decomposes coset spaces over the subgroup") {
  Ctx ctx;
  const GroupPtr c2 = ctx.intern(PermutationGroup::closure(3, {Permutation({1, 0, 2})}));
  const TablePtr ts3 = ctx.symmetric_table(3);
  const TablePtr tc2 = ctx.table(c2);
  const PermutationGroup c3 = PermutationGroup::closure(3, {Permutation({1, 2, 0})});

  // Three points under the transposition: one fixed, one swapped pair.
  const BurnsideElement res_pts =
      restrict_b(ctx, c2, BurnsideElement::basis(ts3, class_of(ts3, *c2)));
  CHECK(res_pts ==
        BurnsideElement::one(tc2) + BurnsideElement::basis(tc2, tc2->trivial_class_index()));

  // Two points under the transposition: a single swapped pair.
  const BurnsideElement res_sgn =
      restrict_b(ctx, c2, BurnsideElement::basis(ts3, class_of(ts3, c3)));
  CHECK(res_sgn == BurnsideElement::basis(tc2, tc2->trivial_class_index()));

  // Restriction is a ring homomorphism.
  const BurnsideElement a = BurnsideElement::basis(ts3, class_of(ts3, *c2));
  const BurnsideElement b = BurnsideElement::basis(ts3, class_of(ts3, c3));
  CHECK(restrict_b(ctx, c2, a * b) == restrict_b(ctx, c2, a) * restrict_b(ctx, c2, b));
}

TEST_CASE("projection formula on a concrete instance") {
  Ctx ctx;
  const GroupPtr s3 = ctx.symmetric(3);
  const GroupPtr c2 = ctx.intern(PermutationGroup::closure(3, {Permutation({1, 0, 2})}));
  const TablePtr ts3 = ctx.symmetric_table(3);
  const TablePtr tc2 = ctx.table(c2);
  const PermutationGroup c3 = PermutationGroup::closure(3, {Permutation({1, 2, 0})});

  const BurnsideElement x = BurnsideElement::basis(ts3, class_of(ts3, c3));
  const BurnsideElement y = BurnsideElement::one(tc2);
  const BurnsideElement lhs = induce_b(ctx, s3, restrict_b(ctx, c2, x) * y);
  const BurnsideElement rhs = x * induce_b(ctx, s3, y);
  CHECK(lhs == rhs);
  CHECK(lhs == BurnsideElement::basis(ts3, ts3->trivial_class_index()));
}

TEST_CASE("outer pairing lands in the block product group") {
  Ctx ctx;
  const TablePtr t2 = ctx.symmetric_table(2);
  const BurnsideElement free2 = BurnsideElement::basis(t2, 0);
  const BurnsideElement one2 = BurnsideElement::one(t2);

  const BurnsideElement pair = outer_young(ctx, free2, one2);
  CHECK(pair.table().ambient().same_elements(*ctx.young(2, 2)));
  CHECK(pair.augmentation() == free2.augmentation() * one2.augmentation());
  CHECK(pair.is_effective());

  // Inducing the pairing up to the full group multiplies the cardinality by
  // the block subgroup's index.
  const BurnsideElement up = induce_b(ctx, ctx.symmetric(4), pair);
  CHECK(up.augmentation() == 12);
  CHECK(up.is_effective());

  // The pairing distributes over sums in each slot.
  const BurnsideElement lhs = outer_young(ctx, free2 + one2, one2);
  CHECK(lhs == outer_young(ctx, free2, one2) + outer_young(ctx, one2, one2));
}

TEST_CASE("orbit decomposition of concrete carriers") {
  Ctx ctx;
  const GroupPtr s4 = ctx.symmetric(4);
  const TablePtr t4 = ctx.symmetric_table(4);
  const GSet pairs = subsets_gset(natural_gset(s4, ctx.caps()), 2, ctx.caps());
  const BurnsideElement cls = from_gset(ctx, pairs);
  CHECK(cls.is_effective());
  CHECK(cls.augmentation() == 6);
  // One transitive orbit whose stabilizer has order 4.
  int nonzero = 0;
  for (int c = 0; c < t4->num_classes(); ++c)
    if (cls.coeff(c) != 0) {
      ++nonzero;
      CHECK(cls.coeff(c) == 1);
      CHECK(t4->cls(c).order == 4);
    }
  CHECK(nonzero == 1);

  // Marks of the class equal fixed-point counts of the carrier.
  for (int c = 0; c < t4->num_classes(); ++c)
    CHECK(cls.mark_at_class(c) == pairs.fixed_by(t4->cls(c).representative));
}

TEST_CASE("operations across different tables are rejected") {
  Ctx ctx;
  const BurnsideElement a = BurnsideElement::one(ctx.symmetric_table(2));
  const BurnsideElement b = BurnsideElement::one(ctx.symmetric_table(3));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
}
