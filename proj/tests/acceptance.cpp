// Acceptance gate: one pass/fail line per criterion, exact integer checks
// only. Degree-6 workloads for criteria 1 and 2 run behind --include-n6; the
// subgroup table for that degree is built before timing starts so the timed
// portion measures the identity itself.
#include <chrono>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "burnside/ctx.hpp"
#include "burnside/gset.hpp"
#include "burnside/torus.hpp"
#include "burnside/verify.hpp"

namespace {

using burnside::CheckResult;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Gate {
  bool all_pass = true;

  void report(int criterion, bool pass, const std::string& detail, double elapsed) {
    all_pass = all_pass && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << " [" << elapsed << " s]\n";
  }

  // Merges sub-checks into one criterion line.
  void report_checks(int criterion, const std::vector<CheckResult>& checks, double elapsed) {
    bool pass = true;
    std::string detail;
    for (const CheckResult& c : checks) {
      pass = pass && c.pass;
      if (!detail.empty()) detail += "; ";
      detail += c.name + (c.pass ? " ok" : " FAILED") + " (" + c.detail + ")";
    }
    report(criterion, pass, detail, elapsed);
  }
};

}  // namespace

int main(int argc, char** argv) {
  bool include_n6 = false;
  uint64_t seed = 20260814;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--include-n6") == 0) {
      include_n6 = true;
    } else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: acceptance [--include-n6] [--seed N]\n";
      return 2;
    }
  }

  burnside::Ctx ctx;
  Gate gate;

  try {
    // 1. The two routes to the degree-n class agree, n = 1..5 within 60 s
    //    (degree 6 opt-in within 600 s after the subgroup table is warm).
    {
      const auto start = Clock::now();
      const CheckResult routes = burnside::check_torus_identity(ctx, 5);
      const double elapsed = seconds_since(start);
      std::string detail = routes.detail;
      bool pass = routes.pass && elapsed < 60.0;
      if (routes.pass && elapsed >= 60.0) detail += " but exceeded the 60 s budget";
      if (include_n6) {
        ctx.symmetric_table(6);  // warm, untimed
        const auto start6 = Clock::now();
        const burnside::LPolynomial a = burnside::torus_class_binomial(ctx, 6);
        const burnside::LPolynomial b = burnside::torus_class_lambda(
            ctx, burnside::natural_gset(ctx.symmetric(6), ctx.caps()));
        const double elapsed6 = seconds_since(start6);
        const bool pass6 = a == b && elapsed6 < 600.0;
        pass = pass && pass6;
        detail += "; degree 6 " + std::string(pass6 ? "ok" : "FAILED") + " [" +
                  std::to_string(elapsed6) + " s]";
      }
      gate.report(1, pass, detail, elapsed);
    }

    // 2. Point counts against the unit-group product for every cycle type and
    //    q in {2,3,4,5,7,8,9}, degrees up to 5 (6 opt-in).
    {
      const auto start = Clock::now();
      const CheckResult counts = burnside::check_point_counts(ctx, include_n6 ? 6 : 5);
      gate.report(2, counts.pass, counts.detail, seconds_since(start));
    }

    // 3. Three-way agreement for the signed power classes, i = 0..6.
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_minus_one_agreement(ctx, 6);
      gate.report(3, c.pass, c.detail, seconds_since(start));
    }

    // 4. Exponential homomorphism at truncation 5 on 20 seeded polynomials
    //    of degree <= 2 with coefficients in [-3, 3].
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_exp_homomorphism(ctx, 20, 5, seed);
      gate.report(4, c.pass, c.detail, seconds_since(start));
    }

    // 5. Power-set stratification identity for every Z inside X, |X| <= 4,
    //    n <= 4.
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_power_stratification(ctx, 4, 4);
      gate.report(5, c.pass, c.detail, seconds_since(start));
    }

    // 6. Induction commutes with the invariant on 50 seeded posets of at most
    //    8 points over random subgroup chains in degree 4.
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_induce_lefschetz(ctx, 50, seed);
      gate.report(6, c.pass, c.detail, seconds_since(start));
    }

    // 7. Certified equivariant isomorphisms between induced subset posets and
    //    flag posets for all inner <= i <= n <= 5.
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_flag_isomorphisms(ctx, 5);
      gate.report(7, c.pass, c.detail, seconds_since(start));
    }

    // 8. Chain-difference classes match and are effective for all i <= n <= 5.
    {
      const auto start = Clock::now();
      const CheckResult c = burnside::check_chain_effectivity(ctx, 5);
      gate.report(8, c.pass, c.detail, seconds_since(start));
    }

    // 9. Ring infrastructure: class counts through degree 6, mark-matrix
    //    shape, ghost multiplicativity (30 per degree <= 5), the double-coset
    //    oracle on all basis pairs (degree <= 4), and the projection formula
    //    (30 seeded instances).
    {
      const auto start = Clock::now();
      std::vector<CheckResult> checks;
      checks.push_back(burnside::check_subgroup_class_counts(ctx, 6));
      checks.push_back(burnside::check_marks_structure(ctx, 6));
      checks.push_back(burnside::check_ghost_multiplicativity(ctx, 30, 5, seed));
      checks.push_back(burnside::check_mackey_products(ctx, 4));
      checks.push_back(burnside::check_projection_formula(ctx, 30, seed));
      gate.report_checks(9, checks, seconds_since(start));
    }

    // 10. Alternating-subset sanity: vanishing above the set size and
    //     binomial cardinalities through degree 6, plus the bounded-subset
    //     recursion for every carrier with at most 5 points.
    {
      const auto start = Clock::now();
      std::vector<CheckResult> checks;
      checks.push_back(burnside::check_lambda_sanity(ctx, 6));
      checks.push_back(burnside::check_subset_poset_recursion(ctx, 5));
      gate.report_checks(10, checks, seconds_since(start));
    }
  } catch (const std::exception& e) {
    std::cout << "FAIL criterion ?: unexpected exception: " << e.what() << "\n";
    return 1;
  }

  std::cout << (gate.all_pass ? "acceptance: all criteria passed"
                              : "acceptance: FAILURES above")
            << "\n";
  return gate.all_pass ? 0 : 1;
}
