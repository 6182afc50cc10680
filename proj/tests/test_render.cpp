#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "burnside/ctx.hpp"
#include "burnside/render.hpp"
#include "doctest.h"

using namespace burnside;

TEST_CASE("element text uses labels for proper classes and integers for the unit") {
  Ctx ctx;
  const TablePtr t2 = ctx.symmetric_table(2);
  const BurnsideElement one = BurnsideElement::one(t2);
  const BurnsideElement free2 = BurnsideElement::basis(t2, 0);

  CHECK(render_element_text(BurnsideElement::zero(t2)) == "0");
  CHECK(render_element_text(one) == "1");
  CHECK(render_element_text(one * 2) == "2");
  CHECK(render_element_text(free2) == "[o1_c0]");
  CHECK(render_element_text(free2 - one) == "[o1_c0] - 1");
  CHECK(render_element_text(one - free2) == "-[o1_c0] + 1");
  CHECK(render_element_text(free2 * -3) == "-3[o1_c0]");
}

TEST_CASE("polynomial text matches the documented shapes") {
  Ctx ctx;
  CHECK(render_lpolynomial_text(torus_class_binomial(ctx, 1)) == "L - 1");
  CHECK(render_lpolynomial_text(torus_class_binomial(ctx, 2)) ==
        "L^2 - [o1_c0]L + [o1_c0] - 1");
  CHECK(render_lpolynomial_text(LPolynomial(ctx.symmetric_table(2))) == "0");
}

TEST_CASE("marks and subgroup listings") {
  Ctx ctx;
  CHECK(render_marks_text(*ctx.symmetric_table(2)) == "[[2,0],[1,1]]");
  CHECK(render_marks_text(*ctx.symmetric_table(3)) ==
        "[[6,0,0,0],[3,1,0,0],[2,0,2,0],[1,1,1,1]]");
  const std::string listing = render_subgroups_text(*ctx.symmetric_table(3));
  CHECK(listing.find("classes: 4") != std::string::npos);
  CHECK(listing.find("o2_c1") != std::string::npos);
  CHECK(listing.find("order=2") != std::string::npos);
}

TEST_CASE("JSON round-trips") {
  Ctx ctx;
  const TablePtr t3 = ctx.symmetric_table(3);

  const BurnsideElement zero = BurnsideElement::zero(t3);
  CHECK(parse_element_json(t3, render_element_json(zero)) == zero);
  const BurnsideElement mixed =
      BurnsideElement::basis(t3, 1) * 2 - BurnsideElement::basis(t3, 0) * 5 +
      BurnsideElement::one(t3);
  CHECK(parse_element_json(t3, render_element_json(mixed)) == mixed);

  const LPolynomial cls = torus_class_binomial(ctx, 3);
  CHECK(parse_lpolynomial_json(t3, render_lpolynomial_json(cls)) == cls);

  const Series s = exp_lpoly(ctx, {2, -1}, 3);
  CHECK(parse_series_json(ctx, render_series_json(s)) == s);

  CHECK_THROWS_AS(parse_element_json(t3, "{\"oops\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(parse_element_json(t3, "not json"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_element_json(t3, "[{\"class_label\":\"o9_c9\",\"coeff\":1}]"),
      std::invalid_argument);
}

TEST_CASE("report JSON carries the verdicts") {
  Ctx ctx;
  const TorusClassReport report = verify_theorem(ctx, 1);
  const std::string text = render_torus_report_json(report);
  CHECK(text.find("\"routes_equal\":true") != std::string::npos);
  CHECK(text.find("\"all_pass\":true") != std::string::npos);
}

TEST_CASE("action files parse and validate") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "burnside_action_test";
  std::filesystem::create_directories(dir);
  const std::filesystem::path good = dir / "good.json";
  {
    std::ofstream out(good);
    out << R"({"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]})";
  }
  const PermutationGroup g = parse_action_file(good.string());
  CHECK(g.degree() == 3);
  CHECK(g.order() == 6);

  const std::filesystem::path bad = dir / "bad.json";
  {
    std::ofstream out(bad);
    out << R"({"degree": 2, "generators": [[0, 0]]})";
  }
  CHECK_THROWS_AS(parse_action_file(bad.string()), std::invalid_argument);
  CHECK_THROWS_AS(parse_action_file((dir / "missing.json").string()),
                  std::invalid_argument);
  std::filesystem::remove_all(dir);
}
