#include <cstdint>
#include <vector>

#include "burnside/ctx.hpp"
#include "burnside/poset.hpp"
#include "doctest.h"

using namespace burnside;

namespace {

int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

// Independent count of strict m-chains in the two-label poset on n positions.
// Weak m-multichains of all {a,b,top}-functions factor per position into
// weakly increasing sequences over one of the two 2-chains, 2m+1 of them, so
// there are (2m+1)^n in total. Alternating binomial inversion turns weak
// counts into strict counts, and removing the all-top function removes
// exactly the chains that end at it.
int64_t two_label_strict_chains(int n, int m) {
  auto weak = [&](int k) {
    int64_t w = 1;
    for (int j = 0; j < n; ++j) w *= 2 * k + 1;
    return w;
  };
  std::vector<int64_t> strict_full(static_cast<size_t>(m) + 1, 0);
  for (int mm = 1; mm <= m; ++mm)
    for (int k = 1; k <= mm; ++k)
      strict_full[static_cast<size_t>(mm)] +=
          ((mm - k) % 2 == 0 ? 1 : -1) * binom(mm - 1, k - 1) * weak(k);
  int64_t prev = 1;  // chains ending at the all-top point, length m - 1 below it
  int64_t cur = 0;
  for (int mm = 1; mm <= m; ++mm) {
    cur = strict_full[static_cast<size_t>(mm)] - prev;
    prev = cur;
  }
  return m == 0 ? 1 : cur;
}

}  // namespace

TEST_CASE("constructor validates the order axioms and equivariance") {
  Ctx ctx;
  const GSet three = trivial_gset(ctx.trivial(0), 3, ctx.caps());

  CHECK_NOTHROW(GPoset(three, [](int i, int j) { return i < j; }));
  CHECK_THROWS_AS(GPoset(three, [](int i, int j) { return i == j; }),
                  std::invalid_argument);  // reflexive
  CHECK_THROWS_AS(GPoset(three,
                         [](int i, int j) {
                           return (i == 0 && j == 1) || (i == 1 && j == 2);
                         }),
                  std::invalid_argument);  // not transitive
  CHECK_THROWS_AS(GPoset(three, [](int i, int j) { return i != j; }),
                  std::invalid_argument);  // not antisymmetric

  const GSet nat2 = natural_gset(ctx.symmetric(2), ctx.caps());
  CHECK_THROWS_AS(GPoset(nat2, [](int i, int j) { return i == 0 && j == 1; }),
                  std::invalid_argument);  // swap breaks the relation
}

TEST_CASE("less, above and covers on the subset poset of three points") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  const GPoset p = bounded_subset_poset(nat3, 3, ctx.caps());
  REQUIRE(p.size() == 7);
  const auto masks = bounded_subset_masks(3, 3);
  REQUIRE(masks == std::vector<uint64_t>{1, 2, 3, 4, 5, 6, 7});

  CHECK(p.less(0, 2));        // {0} < {0,1}
  CHECK(p.less(0, 6));        // {0} < {0,1,2}
  CHECK_FALSE(p.less(2, 0));
  CHECK_FALSE(p.less(0, 1));  // distinct singletons are incomparable
  CHECK(p.above(0) == std::vector<int>{2, 4, 6});

  const auto covers = p.cover_relations();
  CHECK(covers.size() == 9);  // 6 singleton-in-pair plus 3 pair-in-triple
  for (const auto& [lo, hi] : covers) {
    CHECK(p.less(lo, hi));
    CHECK_FALSE((masks[static_cast<size_t>(lo)] == 1 &&
                 masks[static_cast<size_t>(hi)] == 7));  // not a cover
  }
}

TEST_CASE("chain tuples count and reduce to the carrier at length one") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  const GPoset p = bounded_subset_poset(nat3, 2, ctx.caps());
  const GSet chains0 = chain_tuples(p, 0, ctx.caps());
  CHECK(chains0.size() == p.size());
  CHECK(from_gset(ctx, chains0) == from_gset(ctx, p.carrier()));
  CHECK(chain_tuples(p, 1, ctx.caps()).size() == 6);
  CHECK(chain_tuples(p, 2, ctx.caps()).size() == 0);
  CHECK_THROWS_AS(chain_tuples(p, -1, ctx.caps()), std::invalid_argument);
}

TEST_CASE("frozen invariants of small posets") {
  Ctx ctx;
  const TablePtr t3 = ctx.symmetric_table(3);
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());

  // Singletons and pairs of a 3-point set: two copies of the point class
  // minus the free class coming from the six containments.
  const GPoset p = bounded_subset_poset(nat3, 2, ctx.caps());
  const PermutationGroup c2 = PermutationGroup::closure(3, {Permutation({1, 0, 2})});
  const BurnsideElement expected =
      BurnsideElement::basis(t3, t3->class_index_of(c2)) * 2 -
      BurnsideElement::basis(t3, t3->trivial_class_index());
  CHECK(lefschetz_invariant(ctx, p) == expected);
  CHECK(reduced_lefschetz(ctx, p) == expected - BurnsideElement::one(t3));

  // Empty and one-point posets.
  const GPoset empty(empty_gset(ctx.symmetric(2), ctx.caps()), [](int, int) { return false; });
  CHECK(lefschetz_invariant(ctx, empty).is_zero());
  CHECK(reduced_lefschetz(ctx, empty) ==
        -BurnsideElement::one(ctx.symmetric_table(2)));
  const GPoset point(point_gset(ctx.symmetric(2), ctx.caps()),
                     [](int, int) { return false; });
  CHECK(reduced_lefschetz(ctx, point).is_zero());

  // Two-label functions on two positions: two constants plus three free
  // orbits of points against four free orbits of comparable pairs.
  const TablePtr t2 = ctx.symmetric_table(2);
  const GPoset two2 = two_label_poset(ctx, 2);
  REQUIRE(two2.size() == 8);
  const BurnsideElement free2 = BurnsideElement::basis(t2, t2->trivial_class_index());
  CHECK(lefschetz_invariant(ctx, two2) == BurnsideElement::constant(t2, 2) - free2);
  CHECK(reduced_lefschetz(ctx, two2) == BurnsideElement::one(t2) - free2);
}

TEST_CASE("two-label chain counts match the closed-form oracle") {
  Ctx ctx;
  for (int n = 0; n <= 5; ++n) {
    const GPoset p = two_label_poset(ctx, n);
    CHECK(p.size() == two_label_strict_chains(n, 1));
    for (int j = 1; j <= n + 1; ++j)
      CHECK(chain_tuples(p, j, ctx.caps()).size() == two_label_strict_chains(n, j + 1));
  }
  // Spot values at five positions: 242 points, then 2640, 8160, 9600, 3840
  // comparable tuples, and none longer.
  CHECK(two_label_strict_chains(5, 1) == 242);
  CHECK(two_label_strict_chains(5, 2) == 2640);
  CHECK(two_label_strict_chains(5, 3) == 8160);
  CHECK(two_label_strict_chains(5, 4) == 9600);
  CHECK(two_label_strict_chains(5, 5) == 3840);
  CHECK(two_label_strict_chains(5, 6) == 0);
}

TEST_CASE("opposite poset flips the order and keeps the invariant") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  const GPoset p = bounded_subset_poset(nat3, 2, ctx.caps());
  const GPoset q = opposite(p);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) CHECK(p.less(i, j) == q.less(j, i));
  CHECK(lefschetz_invariant(ctx, p) == lefschetz_invariant(ctx, q));

  const GPoset two3 = two_label_poset(ctx, 3);
  CHECK(lefschetz_invariant(ctx, two3) == lefschetz_invariant(ctx, opposite(two3)));
}

TEST_CASE("degenerate bounds give empty posets") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  CHECK(bounded_subset_poset(nat3, 0, ctx.caps()).size() == 0);
  CHECK(bounded_subset_poset(nat3, -1, ctx.caps()).size() == 0);
  CHECK(bounded_subset_masks(3, 0).empty());
  CHECK(subset_flag_pairs(3, 0, 2).empty());
  CHECK(two_label_poset(ctx, 0).size() == 0);
  CHECK_THROWS_AS(subset_flag_pairs(3, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(subset_flag_pairs(3, 1, -1), std::invalid_argument);
}

TEST_CASE("flag posets group inner subsets under a fixed outer one") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());

  const GPoset antichain = subset_flag_poset(nat3, 1, 2, ctx.caps());
  CHECK(antichain.size() == 6);
  CHECK(antichain.cover_relations().empty());

  const GPoset full = subset_flag_poset(nat3, 2, 2, ctx.caps());
  CHECK(full.size() == 9);
  CHECK(full.cover_relations().size() == 6);
  // Comparability only happens at equal outer subsets.
  const auto pairs = subset_flag_pairs(3, 2, 2);
  for (int i = 0; i < full.size(); ++i)
    for (int j = 0; j < full.size(); ++j)
      if (full.less(i, j))
        CHECK(pairs[static_cast<size_t>(i)].first == pairs[static_cast<size_t>(j)].first);
}

TEST_CASE("induced posets keep order inside one coset block only") {
  Ctx ctx;
  const GroupPtr s3 = ctx.symmetric(3);
  const GroupPtr c2 = ctx.intern(PermutationGroup::closure(3, {Permutation({1, 0, 2})}));

  // Points 0,1 below point 2, preserved by the transposition.
  const GSet carrier = restrict_gset(natural_gset(s3, ctx.caps()), c2);
  const GPoset p(carrier, [](int i, int j) { return j == 2 && i < 2; });
  const GPoset ind = induce_poset(s3, p, ctx.caps());
  CHECK(ind.size() == 9);

  int relations = 0;
  for (int i = 0; i < ind.size(); ++i) relations += static_cast<int>(ind.above(i).size());
  CHECK(relations == 6);  // two per coset block, none across blocks
  CHECK(lefschetz_invariant(ctx, ind) == induce_b(ctx, s3, lefschetz_invariant(ctx, p)));
}

TEST_CASE("equivariant isomorphism search finds witnesses and rejects fakes") {
  Ctx ctx;
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  const GPoset p = bounded_subset_poset(nat3, 2, ctx.caps());

  // Complementation matches the poset with its own opposite.
  const auto self = equivariant_poset_iso(p, p);
  REQUIRE(self.has_value());
  const auto flipped = equivariant_poset_iso(p, opposite(p));
  REQUIRE(flipped.has_value());
  CHECK(is_equivariant_map(p, opposite(p), *flipped));
  CHECK(is_order_preserving(p, opposite(p), *flipped));

  // Same carrier with the order erased is not isomorphic.
  const GPoset bare(p.carrier(), [](int, int) { return false; });
  CHECK_FALSE(equivariant_poset_iso(p, bare).has_value());
  CHECK_FALSE(equivariant_poset_iso(bare, p).has_value());

  // Different acting groups are rejected outright.
  const GPoset other(natural_gset(ctx.symmetric(2), ctx.caps()),
                     [](int, int) { return false; });
  CHECK_THROWS_AS(equivariant_poset_iso(p, other), std::invalid_argument);
}

TEST_CASE("map predicates") {
  Ctx ctx;
  const GSet three = trivial_gset(ctx.trivial(0), 3, ctx.caps());
  const GPoset chain(three, [](int i, int j) { return i < j; });
  const std::vector<int> identity = {0, 1, 2};
  const std::vector<int> collapse = {0, 0, 2};
  const std::vector<int> reverse = {2, 1, 0};

  CHECK(is_order_preserving(chain, chain, identity));
  CHECK(is_order_preserving(chain, chain, collapse));
  CHECK_FALSE(is_order_preserving(chain, chain, reverse));
  CHECK(is_equivariant_map(chain, chain, collapse));  // trivial group
  CHECK(pointwise_below_identity(chain, collapse));
  CHECK_FALSE(pointwise_above_identity(chain, collapse));
  CHECK(pointwise_above_identity(chain, identity));
  CHECK(compose_maps(reverse, reverse) == identity);
}
