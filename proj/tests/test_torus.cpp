#include <vector>

#include "burnside/ctx.hpp"
#include "burnside/torus.hpp"
#include "doctest.h"

using namespace burnside;

TEST_CASE("alternating subset operations on small sets") {
  Ctx ctx;
  const TablePtr t2 = ctx.symmetric_table(2);
  const TablePtr t3 = ctx.symmetric_table(3);
  const GSet nat2 = natural_gset(ctx.symmetric(2), ctx.caps());
  const GSet nat3 = natural_gset(ctx.symmetric(3), ctx.caps());
  const PermutationGroup c2 = PermutationGroup::closure(3, {Permutation({1, 0, 2})});
  const BurnsideElement pts3 = BurnsideElement::basis(t3, t3->class_index_of(c2));
  const BurnsideElement free3 = BurnsideElement::basis(t3, t3->trivial_class_index());
  const BurnsideElement free2 = BurnsideElement::basis(t2, t2->trivial_class_index());

  CHECK(lambda_power(ctx, nat3, 0) == BurnsideElement::one(t3));
  CHECK(lambda_power(ctx, nat3, 1) == pts3);
  CHECK(lambda_power(ctx, nat3, 1) == from_gset(ctx, nat3));

  // Values pinned by their ghost coordinates: fixed-point counts of the
  // alternating sums are forced by the evaluation identity
  // sum_i (-1)^i marks(op_i) q^(n-i) = prod_j (q^(d_j) - 1).
  CHECK(lambda_power(ctx, nat2, 2) == free2 - BurnsideElement::one(t2));
  CHECK(lambda_power(ctx, nat3, 2) == free3 - pts3);
  CHECK(lambda_power(ctx, nat3, 3) ==
        free3 - pts3 * 2 + BurnsideElement::one(t3));

  // Beyond the set size everything vanishes.
  CHECK(lambda_power(ctx, nat3, 4).is_zero());
  CHECK(lambda_power(ctx, nat3, 5).is_zero());
  CHECK(lambda_power(ctx, nat2, 3).is_zero());
  CHECK_THROWS_AS(lambda_power(ctx, nat3, -1), std::invalid_argument);
}

TEST_CASE("degree one and two classes have the familiar closed forms") {
  Ctx ctx;

  const LPolynomial one_dim = torus_class_binomial(ctx, 1);
  const TablePtr t1 = ctx.symmetric_table(1);
  CHECK(one_dim.degree() == 1);
  CHECK(one_dim.coeff(1) == BurnsideElement::one(t1));
  CHECK(one_dim.coeff(0) == -BurnsideElement::one(t1));

  const LPolynomial two_dim = torus_class_binomial(ctx, 2);
  const TablePtr t2 = ctx.symmetric_table(2);
  const BurnsideElement free2 = BurnsideElement::basis(t2, t2->trivial_class_index());
  CHECK(two_dim.degree() == 2);
  CHECK(two_dim.coeff(2) == BurnsideElement::one(t2));
  CHECK(two_dim.coeff(1) == -free2);
  CHECK(two_dim.coeff(0) == free2 - BurnsideElement::one(t2));

  const LPolynomial zero_dim = torus_class_binomial(ctx, 0);
  CHECK(zero_dim.degree() == 0);
  CHECK(zero_dim.coeff(0) == BurnsideElement::one(ctx.symmetric_table(0)));
}

TEST_CASE("both routes to the class agree in low degrees") {
  Ctx ctx;
  for (int n = 0; n <= 3; ++n) {
    const LPolynomial via_powers = torus_class_binomial(ctx, n);
    const LPolynomial via_subsets =
        torus_class_lambda(ctx, natural_gset(ctx.symmetric(n), ctx.caps()));
    CHECK(via_powers == via_subsets);
  }
}

TEST_CASE("point counts match the unit-group product formula") {
  Ctx ctx;

  const LPolynomial cls3 = torus_class_binomial(ctx, 3);
  const CycleType t21{{2, 1}};
  const GroupPtr gamma = ctx.intern(cyclic_from_cycle_type(t21));
  const LPolynomial restricted = restrict_class(ctx, gamma, cls3);
  const Permutation sigma = canonical_permutation(t21);
  for (int64_t q : {2, 3, 5, 9}) {
    CHECK(point_count(restricted, sigma, q) == (q * q - 1) * (q - 1));
    CHECK(point_count(restricted, sigma, q) == torus_point_oracle(t21, q));
  }
  CHECK(torus_point_oracle(t21, 3) == 16);
  CHECK(torus_point_oracle(CycleType{{3}}, 2) == 7);
  CHECK(torus_point_oracle(CycleType{{1, 1, 1}}, 4) == 27);

  // The split case: restriction to the trivial group leaves (q - 1)^n.
  const LPolynomial cls2 = torus_class_binomial(ctx, 2);
  const GroupPtr triv = ctx.trivial(2);
  const LPolynomial split = restrict_class(ctx, triv, cls2);
  CHECK(split.coeff(1).augmentation() == -2);
  CHECK(split.coeff(0).augmentation() == 1);
  for (int64_t q : {2, 3, 7}) {
    CHECK(point_count(split, Permutation::identity(2), q) == (q - 1) * (q - 1));
  }

  // sigma must generate the acting group and q must be a sensible size.
  CHECK_THROWS_AS(point_count(cls2, Permutation::identity(2), 3), std::invalid_argument);
  CHECK_THROWS_AS(point_count(split, Permutation::identity(2), 1), std::invalid_argument);
}

TEST_CASE("full report for two dimensions") {
  Ctx ctx;
  const TorusClassReport report = verify_theorem(ctx, 2);
  CHECK(report.n == 2);
  CHECK(report.routes_equal);
  CHECK(report.effectivity_pass);
  CHECK(report.flag_iso_pass);
  REQUIRE(report.point_counts.size() == 14);  // two cycle types, seven sizes
  for (const PointCountCheck& pc : report.point_counts) {
    CHECK(pc.pass);
    CHECK(pc.formula == pc.oracle);
  }
  CHECK(report.all_pass());
}

TEST_CASE("chain-level statements hold in degree three") {
  Ctx ctx;
  CHECK(chain_effectivity_holds(ctx, 3));
  CHECK(flag_isomorphisms_hold(ctx, 3));
}

TEST_CASE("degree caps") {
  Ctx ctx;
  CHECK_THROWS_AS(torus_class_binomial(ctx, 8), CapExceeded);
  CHECK_THROWS_AS(torus_class_binomial(ctx, -1), std::invalid_argument);
}
