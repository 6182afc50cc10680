#include "burnside/torus.hpp"

#include <stdexcept>
#include <string>

#include "burnside/checked.hpp"
#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"

namespace burnside {

BurnsideElement lambda_power(Ctx& ctx, const GSet& s, int i) {
  const TablePtr table = ctx.table(s.group_ptr());
  if (i < 0) throw std::invalid_argument("lambda_power: negative index");
  if (i == 0) return BurnsideElement::one(table);
  if (i > s.size()) return BurnsideElement::zero(table);
  const GSet plus = adjoin_fixed_point(s, ctx.caps());
  const BurnsideElement r = reduced_lefschetz(ctx, bounded_subset_poset(plus, i, ctx.caps()));
  return i % 2 == 1 ? r : -r;
}

namespace {

void check_torus_n(Ctx& ctx, int n) {
  if (n < 0) throw std::invalid_argument("torus: negative degree");
  if (n > ctx.caps().max_torus_n)
    throw CapExceeded("torus: degree exceeds cap " + std::to_string(ctx.caps().max_torus_n));
}

}  // namespace

LPolynomial torus_class_binomial(Ctx& ctx, int n) {
  check_torus_n(ctx, n);
  const GroupPtr target = ctx.symmetric(n);
  LPolynomial direct(ctx.table(target));
  for (int i = 0; i <= n; ++i) {
    const BurnsideElement left = minus_one_power(ctx, i);
    const BurnsideElement right = BurnsideElement::one(ctx.symmetric_table(n - i));
    direct.add_term(induce_b(ctx, target, outer_young(ctx, left, right)), n - i);
  }
  const LPolynomial via_exp = exp_lpoly(ctx, {-1, 1}, n).coeff(n);
  if (!(direct == via_exp))
    throw std::logic_error("torus_class_binomial: internal routes disagree");
  return direct;
}

LPolynomial torus_class_lambda(Ctx& ctx, const GSet& s) {
  const int n = static_cast<int>(s.size());
  LPolynomial out(ctx.table(s.group_ptr()));
  for (int i = 0; i <= n; ++i) {
    const BurnsideElement li = lambda_power(ctx, s, i);
    const BurnsideElement term = i % 2 == 0 ? li : -li;
    out.add_term(term, n - i);
  }
  return out;
}

LPolynomial restrict_class(Ctx& ctx, const GroupPtr& gamma, const LPolynomial& x) {
  LPolynomial out(ctx.table(gamma));
  for (int k = 0; k <= x.degree(); ++k) {
    const BurnsideElement c = x.coeff(k);
    if (!c.is_zero()) out.add_term(restrict_b(ctx, gamma, c), k);
  }
  return out;
}

int64_t point_count(const LPolynomial& x, const Permutation& sigma, int64_t q) {
  if (q < 2) throw std::invalid_argument("point_count: q must be at least 2");
  const PermutationGroup& gamma = x.table().ambient();
  if (sigma.degree() != gamma.degree())
    throw std::invalid_argument("point_count: degree mismatch");
  const PermutationGroup generated = PermutationGroup::closure(sigma.degree(), {sigma});
  if (!generated.same_elements(gamma))
    throw std::invalid_argument("point_count: permutation does not generate the acting group");
  const int full = x.table().identity_class_index();
  int64_t total = 0;
  for (int k = 0; k <= x.degree(); ++k) {
    const int64_t mark = x.coeff(k).mark_at_class(full);
    total = checked_add(total, checked_mul(mark, checked_pow(q, k)));
  }
  return total;
}

int64_t torus_point_oracle(const CycleType& t, int64_t q) {
  if (q < 2) throw std::invalid_argument("torus_point_oracle: q must be at least 2");
  int64_t total = 1;
  for (int d : t.parts) total = checked_mul(total, checked_sub(checked_pow(q, d), 1));
  return total;
}

bool TorusClassReport::all_pass() const {
  if (!routes_equal || !effectivity_pass || !flag_iso_pass) return false;
  for (const PointCountCheck& c : point_counts)
    if (!c.pass) return false;
  return true;
}

bool chain_effectivity_holds(Ctx& ctx, int n) {
  const GSet base = natural_gset(ctx.symmetric(n), ctx.caps());
  for (int i = 0; i <= n; ++i) {
    const GPoset flag_full = subset_flag_poset(base, i, i, ctx.caps());
    const GPoset flag_cut = subset_flag_poset(base, i - 1, i, ctx.caps());
    const GPoset omega_full = bounded_subset_poset(base, i, ctx.caps());
    const GPoset omega_cut = bounded_subset_poset(base, i - 1, ctx.caps());
    for (int j = 0;; ++j) {
      const GSet a = chain_tuples(flag_full, j, ctx.caps());
      const GSet b = chain_tuples(flag_cut, j, ctx.caps());
      const GSet c = chain_tuples(omega_full, j, ctx.caps());
      const GSet d = chain_tuples(omega_cut, j, ctx.caps());
      if (a.size() == 0 && b.size() == 0 && c.size() == 0 && d.size() == 0) break;
      const BurnsideElement lhs = from_gset(ctx, a) - from_gset(ctx, b);
      const BurnsideElement rhs = from_gset(ctx, c) - from_gset(ctx, d);
      if (!(lhs == rhs)) return false;
      if (!lhs.is_effective()) return false;
    }
  }
  return true;
}

bool flag_isomorphisms_hold(Ctx& ctx, int n) {
  const GroupPtr sym = ctx.symmetric(n);
  const GSet base = natural_gset(sym, ctx.caps());
  for (int i = 0; i <= n; ++i) {
    const GroupPtr block_group = ctx.young(i, n - i);
    const GSet first_block = block_points_gset(block_group, 0, i, ctx.caps());
    for (int inner = 0; inner <= i; ++inner) {
      const GPoset small = bounded_subset_poset(first_block, inner, ctx.caps());
      const GPoset induced = induce_poset(sym, small, ctx.caps());
      const GPoset flags = subset_flag_poset(base, inner, i, ctx.caps());
      if (!equivariant_poset_iso(induced, flags).has_value()) return false;
    }
  }
  return true;
}

TorusClassReport verify_theorem(Ctx& ctx, int n) {
  check_torus_n(ctx, n);
  TorusClassReport report{.n = n,
                          .class_binomial = LPolynomial(ctx.symmetric_table(n)),
                          .class_lambda = LPolynomial(ctx.symmetric_table(n))};
  report.class_binomial = torus_class_binomial(ctx, n);
  report.class_lambda = torus_class_lambda(ctx, natural_gset(ctx.symmetric(n), ctx.caps()));
  report.routes_equal = report.class_binomial == report.class_lambda;

  const std::vector<int64_t> qs = {2, 3, 4, 5, 7, 8, 9};
  for (const CycleType& t : CycleType::all_of(n)) {
    const Permutation sigma = canonical_permutation(t);
    const GroupPtr gamma = ctx.intern(cyclic_from_cycle_type(t));
    const LPolynomial restricted = restrict_class(ctx, gamma, report.class_binomial);
    for (int64_t q : qs) {
      PointCountCheck check;
      check.type = t;
      check.q = q;
      check.formula = point_count(restricted, sigma, q);
      check.oracle = torus_point_oracle(t, q);
      check.pass = check.formula == check.oracle;
      report.point_counts.push_back(std::move(check));
    }
  }

  report.effectivity_pass = chain_effectivity_holds(ctx, n);
  report.flag_iso_pass = flag_isomorphisms_hold(ctx, n);
  return report;
}

}  // namespace burnside
