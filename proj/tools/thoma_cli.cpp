// Command-line front end: evaluate spherical functions and run the
// verification suites.
//
//   thoma_cli eval-thoma --alpha 1/2,1/4 --beta 1/4 --sigma "(1 2 3)" --tau e
//   thoma_cli eval-construction --pair A --s 0.7 --g "(1 2)|e"
//   thoma_cli verify cocycle --pair A --samples 200 --seed 42 [--json]
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.

#include <cmath>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "thoma/cocycle.hpp"
#include "thoma/thoma.hpp"
#include "thoma/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

ordered_json to_json(const thoma::SuiteReport& report) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"abs_err", thoma::format_double(c.abs_err)},
                      {"tol", thoma::format_double(c.tol)},
                      {"pass", c.pass}});
  }
  return {{"suite", report.suite}, {"pass", report.pass()}, {"checks", checks}};
}

void print_table(const thoma::SuiteReport& report, bool verbose) {
  const bool all = verbose || report.checks.size() <= 20;
  for (const auto& c : report.checks) {
    if (!all && c.pass) continue;
    std::cout << (c.pass ? "PASS  " : "FAIL  ") << pad(c.name, 48) << "  lhs=" << c.lhs << "  rhs=" << c.rhs
              << "  abs_err=" << thoma::format_double(c.abs_err) << "  tol=" << thoma::format_double(c.tol) << '\n';
  }
  std::cout << "suite " << report.suite << ": " << report.checks.size() - report.failures() << '/'
            << report.checks.size() << " checks passed -> " << (report.pass() ? "PASS" : "FAIL") << '\n';
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double x = std::stod(item, &used);
    if (used != item.size() || !std::isfinite(x)) throw std::invalid_argument("bad number \"" + item + "\"");
    out.push_back(x);
  }
  if (out.empty()) throw std::invalid_argument("empty number list");
  return out;
}

struct EvalThomaArgs {
  std::string alpha, beta, sigma = "e", tau = "e";
};

int eval_thoma(const EvalThomaArgs& args, bool json) {
  const auto params = thoma::parse_params(args.alpha, args.beta);
  const auto sigma = thoma::parse_permutation(args.sigma);
  const auto tau = thoma::parse_permutation(args.tau);
  const auto value = thoma::phi(params, sigma, tau);
  const auto cycles = thoma::cycle_type(thoma::compose(sigma, thoma::inverse(tau)));
  if (json) {
    const ordered_json doc = {{"params", params.to_string()},
                              {"sigma", sigma.to_string()},
                              {"tau", tau.to_string()},
                              {"cycle_type", cycles},
                              {"phi", thoma::format_rational(value)},
                              {"phi_decimal", thoma::format_double(thoma::to_double(value))}};
    std::cout << doc.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "params     " << params.to_string() << '\n'
            << "sigma      " << sigma.to_string() << '\n'
            << "tau        " << tau.to_string() << '\n'
            << "cycle type of sigma*tau^-1: {";
  for (std::size_t i = 0; i < cycles.size(); ++i) std::cout << (i ? "," : "") << cycles[i];
  std::cout << "}\n"
            << "Phi        " << thoma::format_rational(value) << " = "
            << thoma::format_double(thoma::to_double(value)) << '\n';
  return kExitPass;
}

struct EvalConstructionArgs {
  std::string pair = "A", g;
  double s = 0.7;
  std::optional<double> t;
};

int eval_construction(const EvalConstructionArgs& args, bool json) {
  const auto pair = thoma::PairSpec::make(thoma::parse_pair_kind(args.pair), args.s, args.t);
  const auto g = thoma::parse_group_element(args.g);
  thoma::check_shape(pair, g);
  const auto x = thoma::xi(pair, g);
  const auto norm = thoma::norm_sq(x);
  const double norm_value = norm.evaluate(pair.s(), pair.t());
  const double value = thoma::spherical(pair, g);
  const bool in_k = thoma::in_subgroup(pair, g);
  if (json) {
    ordered_json entries = ordered_json::array();
    for (const auto& [idx, c] : x.entries()) {
      ordered_json labels = ordered_json::array();
      for (const auto& l : idx) labels.push_back(l.to_string());
      entries.push_back({{"index", labels}, {"s", thoma::format_rational(c.s)}, {"t", thoma::format_rational(c.t)}});
    }
    const ordered_json doc = {
        {"pair", thoma::to_string(pair.kind())},
        {"s", thoma::format_double(pair.s())},
        {"t", thoma::format_double(pair.t())},
        {"g", g.to_string()},
        {"in_subgroup", in_k},
        {"xi", entries},
        {"norm_sq", {{"ss", thoma::format_rational(norm.ss)}, {"st", thoma::format_rational(norm.st)},
                     {"tt", thoma::format_rational(norm.tt)}}},
        {"norm_sq_value", thoma::format_double(norm_value)},
        {"spherical", thoma::format_double(value)}};
    std::cout << doc.dump(2) << '\n';
    return kExitPass;
  }
  std::cout << "pair       " << thoma::to_string(pair.kind()) << "  s=" << thoma::format_double(pair.s());
  if (pair.kind() == thoma::PairKind::C) std::cout << "  t=" << thoma::format_double(pair.t());
  std::cout << '\n'
            << "g          " << g.to_string() << (in_k ? "  (in K)" : "") << '\n'
            << "Xi(g)      " << x.to_string() << '\n'
            << "|Xi(g)|^2  " << norm.to_string() << " = " << thoma::format_double(norm_value) << '\n'
            << "spherical  exp(-" << thoma::format_double(0.5 * norm_value) << ") = " << thoma::format_double(value)
            << '\n';
  return kExitPass;
}

struct VerifyArgs {
  std::string suite;
  std::optional<std::string> alpha, beta, alpha2, beta2, pair, v;
  std::optional<unsigned> dim;
  thoma::SuiteConfig config;
  bool verbose = false;
};

int verify(VerifyArgs args, bool json) {
  auto& cfg = args.config;
  if (args.alpha || args.beta) cfg.params = thoma::parse_params(args.alpha.value_or(""), args.beta.value_or(""));
  if (args.alpha2 || args.beta2) cfg.params2 = thoma::parse_params(args.alpha2.value_or(""), args.beta2.value_or(""));
  if (args.pair) cfg.pair = thoma::parse_pair_kind(*args.pair);
  if (args.v) cfg.v = parse_doubles(*args.v);
  if (args.dim) {
    if (*args.dim == 0) throw std::invalid_argument("--dim must be positive");
    if (args.v && cfg.v.size() != *args.dim) throw std::invalid_argument("--v does not have --dim components");
    // Unit vector along the diagonal unless given explicitly.
    if (!args.v) cfg.v.assign(*args.dim, 1.0 / std::sqrt(static_cast<double>(*args.dim)));
  }
  const auto report = thoma::run_suite(args.suite, cfg);
  if (json) {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    print_table(report, args.verbose);
  }
  return report.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spherical functions of infinite symmetric groups: evaluation and verification"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print a single JSON document instead of a table");

  EvalThomaArgs thoma_args;
  auto* eval_thoma_cmd = app.add_subcommand("eval-thoma", "Evaluate Phi_{alpha,beta}(sigma, tau)");
  eval_thoma_cmd->add_option("--alpha", thoma_args.alpha, "Comma-separated rationals, e.g. 1/2,1/4");
  eval_thoma_cmd->add_option("--beta", thoma_args.beta, "Comma-separated rationals");
  eval_thoma_cmd->add_option("--sigma", thoma_args.sigma, "Cycle notation, e.g. \"(1 2 3)\" or e");
  eval_thoma_cmd->add_option("--tau", thoma_args.tau, "Cycle notation");
  eval_thoma_cmd->add_flag("--json", json);

  EvalConstructionArgs construction_args;
  auto* eval_construction_cmd =
      app.add_subcommand("eval-construction", "Evaluate Xi(g) and exp(-|Xi(g)|^2/2) for pair A, B, C or D");
  eval_construction_cmd->add_option("--pair", construction_args.pair, "A, B, C or D");
  eval_construction_cmd->add_option("--s", construction_args.s, "s > 0");
  eval_construction_cmd->add_option("--t", construction_args.t, "t (pair C only)");
  eval_construction_cmd->add_option("--g", construction_args.g, "Group element, permutations joined by '|'")
      ->required();
  eval_construction_cmd->add_flag("--json", json);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", verify_args.suite, "oracle | cocycle | kinv | pairA | product | psd | fock | sign")
      ->required()
      ->check(CLI::IsMember(thoma::suite_names()));
  verify_cmd->add_option("--alpha", verify_args.alpha, "alpha parameters");
  verify_cmd->add_option("--beta", verify_args.beta, "beta parameters");
  verify_cmd->add_option("--alpha2", verify_args.alpha2, "second alpha (product suite)");
  verify_cmd->add_option("--beta2", verify_args.beta2, "second beta (product suite)");
  verify_cmd->add_option("--pair", verify_args.pair, "restrict to pair A, B, C or D");
  verify_cmd->add_option("--s", verify_args.config.s, "s > 0");
  verify_cmd->add_option("--t", verify_args.config.t, "t (pair C)");
  verify_cmd->add_option("--n", verify_args.config.n, "rank of the S_n sweep");
  verify_cmd->add_option("--samples", verify_args.config.samples, "random samples per pair kind");
  verify_cmd->add_option("--elements", verify_args.config.elements, "Gram matrix size");
  verify_cmd->add_option("--window", verify_args.config.window, "random elements move only labels 1..window")
      ->check(CLI::Range(1u, 12u));
  verify_cmd->add_option("--seed", verify_args.config.seed, "RNG seed");
  verify_cmd->add_option("--tol", verify_args.config.tol, "PSD tolerance");
  verify_cmd->add_option("--dim", verify_args.dim, "Fock space dimension");
  verify_cmd->add_option("--degree", verify_args.config.degree, "Fock truncation degree")->check(CLI::Range(0u, 15u));
  verify_cmd->add_option("--v", verify_args.v, "translation vector, comma-separated");
  verify_cmd->add_flag("--verbose", verify_args.verbose, "list passing checks too");
  verify_cmd->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_thoma_cmd->parsed()) return eval_thoma(thoma_args, json);
    if (eval_construction_cmd->parsed()) return eval_construction(construction_args, json);
    return verify(verify_args, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  }
}
