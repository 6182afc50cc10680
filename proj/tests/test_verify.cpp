#include <string>
#include <vector>

#include "burnside/ctx.hpp"
#include "burnside/verify.hpp"
#include "doctest.h"

using namespace burnside;

TEST_CASE("suites run their checks and pass at small degrees") {
  Ctx ctx;
  const std::vector<CheckResult> torus = run_suite(ctx, "torus", 2, 7);
  CHECK(torus.size() == 4);
  for (const CheckResult& c : torus) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }

  const std::vector<CheckResult> series = run_suite(ctx, "series", 2, 7);
  for (const CheckResult& c : series) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.pass);
  }

  CHECK_THROWS_AS(run_suite(ctx, "bogus", 2, 7), std::invalid_argument);
}
