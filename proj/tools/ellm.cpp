// Command-line harness: constructs colorings of Z_q, verifies the red and
// blue conditions, reproduces the probabilistic bound calculus, and runs the
// geometric Monte Carlo checks. JSON reports go to stdout, human-readable
// summaries to stderr.

#include <CLI11.hpp>
#include <cstdlib>
#include <ctime>
#include <iostream>
#include <json.hpp>
#include <string>

#include "ellm/arrangement.hpp"
#include "ellm/bounds.hpp"
#include "ellm/coloring.hpp"
#include "ellm/equidist.hpp"
#include "ellm/error.hpp"
#include "ellm/geometry.hpp"
#include "ellm/parallel.hpp"
#include "ellm/red_verifier.hpp"
#include "ellm/reports.hpp"

using json = nlohmann::json;
using namespace ellm;

namespace {

std::string iso_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const json& config, const json& report) {
  json out{{"tool", kToolName},
           {"version", kToolVersion},
           {"timestamp", iso_now()},
           {"config", config},
           {"report", report}};
  std::cout << out.dump(2) << "\n";
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::SearchExhausted: return 3;
    case Errc::Internal: return 4;
    default: return 2;
  }
}

RealParam parse_param(const std::string& text, int precision_digits, bool approximate) {
  if (text == "sqrt2") return RealParam::sqrt2();
  if (text == "pi") return RealParam::pi();
  if (text == "e") return RealParam::e();
  if (approximate) {
    Real radius = pow(Real(10), -precision_digits);
    return RealParam::approximate(text, radius);
  }
  return RealParam::exact(parse_rational(text));
}

Int parse_big(const std::string& text) {
  // plain digits, or <mantissa>e<exp> with integer mantissa
  auto e = text.find_first_of("eE");
  if (e == std::string::npos) return Int(text);
  Int mant(text.substr(0, e));
  int exp = std::stoi(text.substr(e + 1));
  if (exp < 0) raise(Errc::BadField, "negative exponent in '" + text + "'");
  return mant * boost::multiprecision::pow(Int(10), static_cast<unsigned>(exp));
}

struct GenArgs {
  std::uint64_t q = 0;
  std::uint64_t seed = 0;
  std::string out;
  double p_override = -1;
  bool require_red_free = false;
  std::uint64_t max_seeds = 20;
};

int cmd_gen(const GenArgs& a) {
  json config{{"subcommand", "gen"}, {"q", a.q},    {"seed", a.seed},
              {"out", a.out},        {"require_red_free", a.require_red_free},
              {"max_seeds", a.max_seeds}};
  if (a.p_override >= 0) config["p_override"] = a.p_override;
  std::optional<double> p;
  if (a.p_override >= 0) p = a.p_override;

  PrimeModulus q(a.q);
  std::uint64_t attempts = 0;
  for (std::uint64_t s = a.seed;; ++s) {
    ++attempts;
    ZqColoring coloring = generate_random_coloring(q, s, p);
    bool ok = !a.require_red_free || verify_red_free(coloring);
    if (ok) {
      save_coloring(coloring, a.out);
      emit(config, json{{"q", a.q},
                        {"seed_used", s},
                        {"attempts", attempts},
                        {"red_count", coloring.count(Color::Red)},
                        {"red_free_checked", a.require_red_free},
                        {"path", a.out}});
      std::cerr << "wrote " << a.out << " (seed " << s << ", " << attempts << " attempt(s))\n";
      return 0;
    }
    if (attempts >= a.max_seeds) break;
  }
  std::cerr << "no red-free coloring within " << a.max_seeds << " seeds\n";
  return 3;
}

struct VerifyArgs {
  std::string in;
  int m = 0;
  int max_m = 64;
  std::uint64_t max_q = 64;
};

int cmd_verify(const VerifyArgs& a) {
  json config{{"subcommand", "verify"}, {"in", a.in}, {"m", a.m}};
  ZqColoring coloring = load_coloring(a.in);
  json report = verification_report(coloring);
  bool pass = report["red_free"].get<bool>();
  if (a.m > 0) {
    EnumerationGuard guard{a.max_m, a.max_q};
    auto witness = search_blue_progression(coloring, a.m, guard);
    if (witness) {
      report["blue_witness"] = witness_report(coloring.q(), a.m, witness->cell, witness->colors);
      report["blue_free"] = false;
      pass = false;
    } else {
      report["blue_free"] = true;
    }
  }
  emit(config, report);
  std::cerr << (pass ? "all requested checks passed\n" : "check failed\n");
  return pass ? 0 : 1;
}

struct BoundsArgs {
  std::string grid = "default";
  std::string q, m;
  bool no_refine = false;
};

int cmd_bounds(const BoundsArgs& a) {
  json config{{"subcommand", "bounds"}, {"grid", a.grid}};
  if (!a.q.empty()) {
    config["q"] = a.q;
    Int q = parse_big(a.q);
    Int m = a.m.empty() ? Int(q * q * q) : parse_big(a.m);
    if (!a.m.empty()) config["m"] = a.m;
    BoundsReport report = evaluate_bounds(q, m);
    emit(config, bounds_report_json(report));
    std::cerr << (report.sufficient ? "sufficient\n" : "not sufficient\n");
    return report.sufficient ? 0 : 1;
  }
  std::vector<Int> grid;
  if (a.grid == "default") {
    grid = default_q_grid();
  } else {
    std::string token;
    std::istringstream ss(a.grid);
    while (std::getline(ss, token, ',')) grid.push_back(parse_big(token));
  }
  BoundsReport report = find_sufficient_parameters(grid, !a.no_refine);
  emit(config, bounds_report_json(report));
  std::cerr << "smallest sufficient q = " << report.q.str() << ", m = q^3 = " << report.m.str()
            << "\n";
  return 0;
}

struct LemmaArgs {
  std::uint64_t q = 0;
  std::string alpha = "0", beta = "0";
  bool approximate = false;
  std::uint64_t guard_q = 1000;
  int precision = 48;
};

int cmd_lemma(const LemmaArgs& a) {
  json config{{"subcommand", "lemma"}, {"q", a.q},
              {"alpha", a.alpha},      {"beta", a.beta},
              {"approximate", a.approximate}, {"precision", a.precision}};
  PrimeModulus q(a.q);
  QuadraticParams params{parse_param(a.alpha, a.precision, a.approximate),
                         parse_param(a.beta, a.precision, a.approximate)};
  RationalApprox approx = find_small_multiple(params.alpha, q, a.guard_q);
  LemmaVerdict verdict = verify_lemma_dist(params, q, a.guard_q);
  emit(config, lemma_report(q, params, approx, verdict));
  std::cerr << "hit " << verdict.hit_count << " of " << a.q << " intervals; "
            << (verdict.pass ? "pass" : "fail") << "\n";
  return verdict.pass ? 0 : 1;
}

struct GeoArgs {
  std::string in;
  std::string mode = "red";
  int n = 10;
  int m = 3;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  bool float_mode = false;
  bool check_identity = false;
};

int cmd_geo(const GeoArgs& a) {
  json config{{"subcommand", "geo"}, {"mode", a.check_identity ? "identity" : a.mode},
              {"n", a.n},            {"m", a.m},
              {"trials", a.trials},  {"seed", a.seed},
              {"float", a.float_mode}};
  if (a.check_identity) {
    SplitMix64 rng(a.seed);
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < a.trials; ++t) {
      auto copy = sample_rat_line_copy(rng, a.n, a.m, 100);
      if (!second_difference_identity(squared_distances(copy))) ++failures;
      if (!second_difference_identity(squared_distances(to_float_copy(copy)), 1e-9)) ++failures;
    }
    emit(config, json{{"trials", a.trials}, {"failures", failures}});
    std::cerr << (failures == 0 ? "all identities hold\n" : "identity failures!\n");
    return failures == 0 ? 0 : 1;
  }
  ZqColoring coloring = load_coloring(a.in);
  if (a.mode == "red") {
    GeoReport report = monte_carlo_red_check(coloring, a.n, a.trials, a.seed);
    emit(config, geo_report_json(report));
    std::cerr << report.all_red << " all-red copies in " << a.trials << " trials\n";
    return report.all_red == 0 ? 0 : 1;
  }
  if (a.mode == "blue") {
    GeoReport report = monte_carlo_blue_scan(coloring, a.n, a.m, a.trials, a.seed, a.float_mode);
    emit(config, geo_report_json(report));
    std::cerr << report.all_blue << " all-blue copies in " << a.trials << " trials\n";
    return 0;  // observational
  }
  raise(Errc::DomainError, "mode must be red or blue");
}

struct PatternsArgs {
  std::uint64_t q = 0;
  int m = 0;
  std::string coloring;
  int max_m = 64;
  std::uint64_t max_q = 64;
  std::size_t list_cap = 32;
};

int cmd_patterns(const PatternsArgs& a) {
  json config{{"subcommand", "patterns"}, {"q", a.q}, {"m", a.m}};
  if (!a.coloring.empty()) config["coloring"] = a.coloring;
  PrimeModulus q(a.q);
  EnumerationGuard guard{a.max_m, a.max_q};
  auto cells = enumerate_patterns(q, a.m, guard);
  Int bound = sign_pattern_bound(4 * Int(a.m) * a.m * a.m, 2, 1);
  bool within = Int(cells.size()) <= bound;

  json report{{"q", a.q},
              {"m", a.m},
              {"pattern_count", cells.size()},
              {"sign_pattern_bound", bound.str()},
              {"within_bound", within}};
  json listed = json::array();
  for (std::size_t i = 0; i < cells.size() && i < a.list_cap; ++i)
    listed.push_back(json{{"a", format_rational(cells[i].a)},
                          {"d", format_rational(cells[i].d)},
                          {"indices", cells[i].indices}});
  report["witnesses"] = listed;

  if (!a.coloring.empty()) {
    ZqColoring coloring = load_coloring(a.coloring);
    if (coloring.q() != a.q) raise(Errc::DomainError, "coloring modulus differs from --q");
    auto witness = search_blue_progression(coloring, a.m, guard);
    if (witness) {
      report["blue_witness"] =
          witness_report(coloring.q(), a.m, witness->cell, witness->colors);
      report["blue_free"] = false;
    } else {
      report["blue_free"] = true;
    }
  }
  emit(config, report);
  std::cerr << cells.size() << " patterns\n";
  return within ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"red/blue colorings of Z_q lifted to Euclidean space: generation, exhaustive "
               "verification, pattern enumeration, bound calculus"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  unsigned threads = 0;
  app.add_option("--threads", threads, "cap worker threads (0 = hardware)");
  int precision = 48;
  if (const char* env = std::getenv("ELLM_PRECISION")) precision = std::atoi(env);
  app.add_option("--precision", precision, "significant digits for approximate inputs");

  GenArgs gen;
  auto* sc_gen = app.add_subcommand("gen", "generate a random coloring file");
  sc_gen->add_option("--q", gen.q, "odd prime modulus")->required();
  sc_gen->add_option("--seed", gen.seed, "starting seed");
  sc_gen->add_option("--out", gen.out, "output path")->required();
  sc_gen->add_option("--p-override", gen.p_override, "red probability (default q^(-3/4))");
  sc_gen->add_flag("--require-red-free", gen.require_red_free, "retry seeds until red-free");
  sc_gen->add_option("--max-seeds", gen.max_seeds, "seed budget for --require-red-free");

  VerifyArgs verify;
  auto* sc_verify = app.add_subcommand("verify", "verify the red (and optionally blue) condition");
  sc_verify->add_option("--in", verify.in, "coloring file")->required();
  sc_verify->add_option("--m", verify.m, "also certify no all-blue pattern for this m");
  sc_verify->add_option("--max-m", verify.max_m, "enumeration guard for m");
  sc_verify->add_option("--max-q", verify.max_q, "enumeration guard for q");

  BoundsArgs bounds;
  auto* sc_bounds = app.add_subcommand("bounds", "bound calculus and sufficiency search");
  sc_bounds->add_option("--grid", bounds.grid, "'default' or comma list (e.g. 1e4,1e8)");
  sc_bounds->add_option("--q", bounds.q, "evaluate a single q instead of searching");
  sc_bounds->add_option("--m", bounds.m, "m for single evaluation (default q^3)");
  sc_bounds->add_flag("--no-refine", bounds.no_refine, "skip bisection refinement");

  LemmaArgs lemma;
  auto* sc_lemma = app.add_subcommand("lemma", "quadratic interval-distribution check");
  sc_lemma->add_option("--q", lemma.q, "odd prime modulus")->required();
  sc_lemma->add_option("--alpha", lemma.alpha, "rational, decimal, or sqrt2|pi|e");
  sc_lemma->add_option("--beta", lemma.beta, "rational, decimal, or sqrt2|pi|e");
  sc_lemma->add_flag("--approximate", lemma.approximate,
                     "treat decimal inputs as approximations at --precision digits");
  sc_lemma->add_option("--guard-q", lemma.guard_q, "guard for the O(q^2) scan and q^3 loop");

  GeoArgs geo;
  auto* sc_geo = app.add_subcommand("geo", "Monte Carlo checks on line copies in E^n");
  sc_geo->add_option("--in", geo.in, "coloring file");
  sc_geo->add_option("--mode", geo.mode, "red | blue");
  sc_geo->add_option("--n", geo.n, "ambient dimension");
  sc_geo->add_option("--m", geo.m, "points per copy");
  sc_geo->add_option("--trials", geo.trials, "number of sampled copies");
  sc_geo->add_option("--seed", geo.seed, "RNG seed");
  sc_geo->add_flag("--float", geo.float_mode, "double-precision coloring with boundary refusal");
  sc_geo->add_flag("--check-identity", geo.check_identity,
                   "verify the squared-distance identity on random copies");

  PatternsArgs patterns;
  auto* sc_patterns = app.add_subcommand("patterns", "exact interval-pattern enumeration");
  sc_patterns->add_option("--q", patterns.q, "odd prime modulus")->required();
  sc_patterns->add_option("--m", patterns.m, "points per progression")->required();
  sc_patterns->add_option("--coloring", patterns.coloring, "also search for a blue witness");
  sc_patterns->add_option("--max-m", patterns.max_m, "enumeration guard for m");
  sc_patterns->add_option("--max-q", patterns.max_q, "enumeration guard for q");
  sc_patterns->add_option("--list-cap", patterns.list_cap, "witnesses listed in the report");

  CLI11_PARSE(app, argc, argv);
  set_max_threads(threads);
  lemma.precision = precision;

  try {
    if (*sc_gen) return cmd_gen(gen);
    if (*sc_verify) return cmd_verify(verify);
    if (*sc_bounds) return cmd_bounds(bounds);
    if (*sc_lemma) return cmd_lemma(lemma);
    if (*sc_geo) return cmd_geo(geo);
    if (*sc_patterns) return cmd_patterns(patterns);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
