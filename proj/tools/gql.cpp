// gql: command-line front end. Machine output is JSON on stdout; errors are
// JSON on stderr with exit codes 2 (parse/usage), 3 (precondition) and
// 4 (internal invariant).

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gql/census.hpp"
#include "gql/classifier.hpp"
#include "gql/json_io.hpp"
#include "gql/quartic.hpp"
#include "gql/riemann_hurwitz.hpp"

using namespace gql;

namespace {

bool g_pretty = false;

void render(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = it.value();
    const bool scalar_list = v.is_array() && std::none_of(v.begin(), v.end(), [](const Json& x) {
                               return x.is_object();
                             });
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      render(v, out, indent + 2);
    } else if (v.is_array() && !scalar_list) {
      out << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.contains("line")) {
          out << pad << "  " << x["line"].get<std::string>() << "\n";
          continue;
        }
        out << pad << "  -\n";
        render(x, out, indent + 4);
      }
    } else {
      out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Json& j) {
  if (g_pretty)
    render(j, std::cout, 0);
  else
    std::cout << j.dump() << "\n";
}

int fail(ErrorCode code, const std::string& kind, const std::string& message) {
  Json inner;
  inner["code"] = static_cast<int>(code);
  inner["kind"] = kind;
  inner["message"] = message;
  Json j;
  j["error"] = inner;
  std::cerr << j.dump() << "\n";
  return static_cast<int>(code);
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GQL_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("GQL_SEED is not a nonnegative integer: ") + env);
  }
}

struct ClassifyArgs {
  std::string group;
  std::optional<int> degree;
  int genus = 0;
  std::optional<int> sym_power;
};

int cmd_classify(const ClassifyArgs& a) {
  const PermGroup g = parse_group_spec(a.group, a.degree);
  const QuotientReport r = classify_quotient(g, a.genus);
  Json j = to_json(r);
  j["zariski"] = to_json(zariski_obstruction(g, a.genus));
  if (a.sym_power) {
    Json s;
    s["genus"] = a.genus;
    s["n"] = *a.sym_power;
    s["kind"] = to_string(sym_power_kind(a.genus, *a.sym_power));
    j["sym_power"] = s;
  }
  emit(j);
  return 0;
}

int cmd_census(const std::string& path) {
  const auto fixtures = load_fixtures(path);
  const auto records = run_census(fixtures);
  Json j;
  auto list = Json::array();
  int exit_code = 0;
  for (const auto& r : records) {
    list.push_back(to_json(r));
    if (r.ok()) continue;
    const int code = r.transitive ? 4 : 3;
    exit_code = std::max(exit_code, code);
  }
  j["records"] = list;
  j["count"] = records.size();
  j["all_passed"] = exit_code == 0;
  emit(j);
  if (exit_code != 0)
    fail(static_cast<ErrorCode>(exit_code), exit_code == 3 ? "precondition_failed" : "invariant_violation",
         "census: at least one record failed its checks");
  return exit_code;
}

struct RhArgs {
  std::int64_t degree = 1;
  std::int64_t genus_base = 0;
  std::optional<std::int64_t> genus_source;
  std::optional<std::int64_t> ramification;
};

int cmd_rh(const RhArgs& a) {
  if (a.genus_source.has_value() == a.ramification.has_value())
    throw ParseError("rh: give exactly one of --genus-source and --ramification");
  CoverData c;
  c.degree = a.degree;
  c.genus_base = a.genus_base;
  if (a.genus_source) {
    c.genus_source = *a.genus_source;
    c.ramification_degree = ramification_degree(a.degree, c.genus_source, a.genus_base);
  } else {
    c.ramification_degree = *a.ramification;
    c.genus_source = genus_from_cover(a.degree, a.genus_base, c.ramification_degree);
  }
  emit(to_json(c));
  return 0;
}

struct QuarticArgs {
  std::string mode;
  std::string curve;
  std::optional<std::uint64_t> prime;
  std::optional<int> ext;
  std::optional<std::uint64_t> seed;
};

int cmd_quartic(const QuarticArgs& a) {
  const PlaneCurve curve = curve_from_json(read_json_file(a.curve));
  const std::uint64_t seed = a.seed ? *a.seed : default_seed();
  if (a.mode == "eliminant") {
    const auto report = residual_eliminant(curve, seed);
    std::vector<RootCheck> checks;
    const auto primes = a.prime ? std::vector<std::uint64_t>{*a.prime} : good_primes(curve, report.form, 100, 2);
    for (auto p : primes) checks.push_back(check_eliminant_roots(curve, report, p, seed));
    Json j = to_json(report, checks);
    j["seed"] = seed;
    emit(j);
    return 0;
  }
  FlexOptions opt;
  opt.prime = a.prime;
  opt.ext = a.ext;
  opt.seed = seed;
  opt.residuals = a.mode == "residuals";
  Json j = to_json(analyze_flexes(curve, opt));
  j["seed"] = seed;
  emit(j);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gql: quotients of curve powers, covers and plane quartic flexes"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Human-readable output instead of JSON");
  app.set_help_all_flag("--help-all");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Classify C^n/G for a transitive group G");
  classify->add_option("--group", ca.group, "Cycle list such as \"(1 2 3 4),(1 3)\" or a JSON group")
      ->required();
  classify->add_option("--degree", ca.degree, "Number of points n");
  classify->add_option("--genus", ca.genus, "Genus of the curve C")->required();
  classify->add_option("--sym-power", ca.sym_power, "Also report the type of Sym^k C");

  std::string census_path;
  auto* census = app.add_subcommand("census", "Check the transposition lemmas on a fixture file");
  census->add_option("fixtures", census_path, "Fixture JSON file")->required();

  RhArgs ra;
  auto* rh = app.add_subcommand("rh", "Riemann-Hurwitz for a cover of curves");
  rh->add_option("--degree", ra.degree, "Degree of the cover")->required();
  rh->add_option("--genus-base", ra.genus_base, "Genus of the base curve")->required();
  rh->add_option("--genus-source", ra.genus_source, "Genus of the covering curve");
  rh->add_option("--ramification", ra.ramification, "Total ramification degree");

  QuarticArgs qa;
  auto* quartic = app.add_subcommand("quartic", "Flexes of a plane curve and their residual points");
  quartic->add_option("mode", qa.mode, "flexes, residuals or eliminant")
      ->required()
      ->check(CLI::IsMember({"flexes", "residuals", "eliminant"}));
  quartic->add_option("--curve", qa.curve, "Curve JSON file")->required();
  quartic->add_option("--prime", qa.prime, "Prime to work over");
  quartic->add_option("--ext", qa.ext, "Extension degree k of F_{p^k}");
  quartic->add_option("--seed", qa.seed, "Seed for coordinate changes (default GQL_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(ErrorCode::Parse, "parse_error", e.what());
  }

  try {
    if (*classify) return cmd_classify(ca);
    if (*census) return cmd_census(census_path);
    if (*rh) return cmd_rh(ra);
    if (*quartic) return cmd_quartic(qa);
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    return fail(ErrorCode::Invariant, "invariant_violation", e.what());
  }
  return fail(ErrorCode::Parse, "parse_error", "no subcommand");
}
