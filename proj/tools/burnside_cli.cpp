#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "burnside/ctx.hpp"
#include "burnside/errors.hpp"
#include "burnside/render.hpp"
#include "burnside/torus.hpp"
#include "burnside/verify.hpp"

namespace {

using burnside::Ctx;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string cache_dir;
  std::string format = "text";
  uint64_t seed = 0;
  int n = 0;
  int max_n = 5;
  std::string suite = "all";
  std::string action_path;
  std::string cycle_type;
  int64_t q = 2;
};

int run_torus(Ctx& ctx, const Options& opt) {
  const burnside::LPolynomial binomial = burnside::torus_class_binomial(ctx, opt.n);
  const burnside::LPolynomial lambda = burnside::torus_class_lambda(
      ctx, burnside::natural_gset(ctx.symmetric(opt.n), ctx.caps()));
  const bool equal = binomial == lambda;

  bool have_restricted = false;
  burnside::LPolynomial restricted(ctx.symmetric_table(opt.n));
  if (!opt.action_path.empty()) {
    const burnside::GroupPtr gamma =
        ctx.intern(burnside::parse_action_file(opt.action_path));
    restricted = burnside::restrict_class(ctx, gamma, binomial);
    have_restricted = true;
  }

  if (opt.format == "json") {
    json out{{"n", opt.n},
             {"binomial", json::parse(burnside::render_lpolynomial_json(binomial))},
             {"lambda", json::parse(burnside::render_lpolynomial_json(lambda))},
             {"routes_equal", equal}};
    if (have_restricted)
      out["restricted"] = json::parse(burnside::render_lpolynomial_json(restricted));
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "binomial: " << burnside::render_lpolynomial_text(binomial) << "\n";
    std::cout << "lambda: " << burnside::render_lpolynomial_text(lambda) << "\n";
    if (have_restricted)
      std::cout << "restricted: " << burnside::render_lpolynomial_text(restricted) << "\n";
    std::cout << "equal: " << (equal ? "yes" : "no") << "\n";
  }
  return equal ? kExitPass : kExitVerificationFailure;
}

int run_verify(Ctx& ctx, const Options& opt) {
  const std::vector<burnside::CheckResult> results =
      burnside::run_suite(ctx, opt.suite, opt.max_n, opt.seed);
  int failures = 0;
  for (const burnside::CheckResult& r : results)
    if (!r.pass) ++failures;

  if (opt.format == "json") {
    json checks = json::array();
    for (const burnside::CheckResult& r : results)
      checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << json{{"suite", opt.suite},
                      {"max_n", opt.max_n},
                      {"seed", opt.seed},
                      {"checks", checks},
                      {"failures", failures}}
                     .dump()
              << "\n";
  } else {
    for (const burnside::CheckResult& r : results)
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    if (failures == 0)
      std::cout << "all " << results.size() << " checks passed\n";
    else
      std::cout << failures << " of " << results.size() << " checks failed\n";
  }
  return failures == 0 ? kExitPass : kExitVerificationFailure;
}

int run_subgroups(Ctx& ctx, const Options& opt) {
  burnside::TableInfo info;
  const burnside::TablePtr table = ctx.table(ctx.symmetric(opt.n), &info);
  const char* status = info.source == burnside::TableSource::kCacheHit ? "hit"
                       : info.cache_written                            ? "written"
                                                                       : "none";
  if (opt.format == "json") {
    json out = json::parse(burnside::render_subgroups_json(*table));
    out["cache"] = status;
    if (!info.cache_path.empty()) out["cache_path"] = info.cache_path;
    std::cout << out.dump() << "\n";
  } else {
    if (info.source == burnside::TableSource::kCacheHit)
      std::cout << "cache hit: " << info.cache_path << "\n";
    else if (info.cache_written)
      std::cout << "cache write: " << info.cache_path << "\n";
    std::cout << burnside::render_subgroups_text(*table);
  }
  return kExitPass;
}

int run_marks(Ctx& ctx, const Options& opt) {
  const burnside::TablePtr table = ctx.table(ctx.symmetric(opt.n));
  if (opt.format == "json")
    std::cout << burnside::render_marks_json(*table) << "\n";
  else
    std::cout << burnside::render_marks_text(*table) << "\n";
  return kExitPass;
}

int run_count(Ctx& ctx, const Options& opt) {
  const burnside::CycleType type = burnside::CycleType::parse(opt.cycle_type);
  if (type.n() != opt.n)
    throw std::invalid_argument("cycle type " + type.to_string() + " is not a partition of " +
                                std::to_string(opt.n));
  const burnside::LPolynomial cls = burnside::torus_class_binomial(ctx, opt.n);
  const burnside::GroupPtr gamma = ctx.intern(burnside::cyclic_from_cycle_type(type));
  const burnside::LPolynomial restricted = burnside::restrict_class(ctx, gamma, cls);
  const int64_t formula =
      burnside::point_count(restricted, burnside::canonical_permutation(type), opt.q);
  const int64_t oracle = burnside::torus_point_oracle(type, opt.q);
  const bool match = formula == oracle;
  if (opt.format == "json") {
    std::cout << json{{"n", opt.n},
                      {"cycle_type", type.to_string()},
                      {"q", opt.q},
                      {"formula", formula},
                      {"oracle", oracle},
                      {"match", match}}
                     .dump()
              << "\n";
  } else {
    std::cout << formula << ", " << oracle << "\n";
    std::cout << "match: " << (match ? "yes" : "no") << "\n";
  }
  return match ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Burnside-ring and equivariant poset calculator"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--cache-dir", opt.cache_dir,
                 "Directory for symmetric-group table caches")
      ->envname("BURNSIDE_CACHE_DIR");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized suites")->capture_default_str();

  CLI::App* torus = app.add_subcommand(
      "torus", "Compute the degree-n class by both routes and compare");
  torus->add_option("--n", opt.n, "Degree")->required();
  torus->add_option("--action", opt.action_path,
                    "JSON file {degree, generators} giving a subgroup to restrict to");

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--max-n", opt.max_n, "Largest degree to verify")
      ->check(CLI::Range(0, 7))
      ->capture_default_str();
  verify->add_option("--suite", opt.suite, "Which suite to run")
      ->check(CLI::IsMember({"torus", "lemmas", "series", "all"}))
      ->capture_default_str();

  CLI::App* subgroups =
      app.add_subcommand("subgroups", "List subgroup classes of a symmetric group");
  subgroups->add_option("--n", opt.n, "Degree")->required();

  CLI::App* marks = app.add_subcommand("marks", "Print the table of marks");
  marks->add_option("--n", opt.n, "Degree")->required();

  CLI::App* count = app.add_subcommand(
      "count", "Evaluate the class formula at q and compare with the unit-group count");
  count->add_option("--n", opt.n, "Degree")->required();
  count->add_option("--cycle-type", opt.cycle_type, "Comma-separated parts, e.g. 2,1")
      ->required();
  count->add_option("--q", opt.q, "Formal prime power, q >= 2")->required();

  // Let the app-level options (--format, --cache-dir, --seed) appear after the
  // subcommand name as well as before it.
  for (CLI::App* sub : {torus, verify, subgroups, marks, count}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitUsage;
  }

  try {
    Ctx ctx(burnside::Caps{}, opt.cache_dir);
    if (app.got_subcommand(torus)) return run_torus(ctx, opt);
    if (app.got_subcommand(verify)) return run_verify(ctx, opt);
    if (app.got_subcommand(subgroups)) return run_subgroups(ctx, opt);
    if (app.got_subcommand(marks)) return run_marks(ctx, opt);
    if (app.got_subcommand(count)) return run_count(ctx, opt);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const burnside::CapExceeded& e) {
    std::cerr << "error (cap): " << e.what() << "\n";
    return kExitUsage;
  } catch (const burnside::OverflowError& e) {
    std::cerr << "error (overflow): " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
