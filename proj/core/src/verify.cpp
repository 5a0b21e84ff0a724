#include "thoma/verify.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <map>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "thoma/olshanski.hpp"
#include "thoma/random.hpp"

namespace thoma {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string describe(const ValueSource& source) {
  if (const auto* params = std::get_if<ThomaParams>(&source)) return "thoma " + params->to_string();
  const auto& pair = std::get<PairSpec>(source);
  std::string out = "construction " + to_string(pair.kind()) + " s=" + format_double(pair.s());
  if (pair.kind() == PairKind::C) out += " t=" + format_double(pair.t());
  return out;
}

double spherical_value(const ValueSource& source, const GroupElement& g) {
  if (const auto* params = std::get_if<ThomaParams>(&source)) {
    if (g.parts.size() != 2) throw std::invalid_argument("Thoma functions live on pairs (sigma, tau)");
    return to_double(phi(*params, g.parts[0], g.parts[1]));
  }
  return spherical(std::get<PairSpec>(source), g);
}

namespace {

// Exact value of Phi(g): a rational for Thoma sources, the quadratic form
// |Xi(g)|^2 for constructions.
using ExactValue = std::variant<Rational, QuadraticNorm>;

ExactValue exact_value(const ValueSource& source, const GroupElement& g) {
  if (const auto* params = std::get_if<ThomaParams>(&source)) {
    if (g.parts.size() != 2) throw std::invalid_argument("Thoma functions live on pairs (sigma, tau)");
    return phi(*params, g.parts[0], g.parts[1]);
  }
  return norm_sq(xi(std::get<PairSpec>(source), g));
}

double to_value(const ValueSource& source, const ExactValue& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_double(*r);
  const auto& pair = std::get<PairSpec>(source);
  return std::exp(-0.5 * std::get<QuadraticNorm>(v).evaluate(pair.s(), pair.t()));
}

// Sign of p by counting inversions of its image sequence on {1..max}.
int sign_by_inversions(const Permutation& p) {
  const std::uint32_t n = p.max_index();
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 1; i <= n; ++i) images[i - 1] = p.apply(Label::plain(i)).index;
  int inversions = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) inversions += images[i] > images[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<PairSpec> pairs_for(const SuiteConfig& config) {
  std::vector<PairKind> kinds = {PairKind::A, PairKind::B, PairKind::C, PairKind::D};
  if (config.pair) kinds = {*config.pair};
  std::vector<PairSpec> out;
  for (PairKind k : kinds) {
    out.push_back(PairSpec::make(k, config.s, k == PairKind::C ? std::optional<double>(config.t) : std::nullopt));
  }
  return out;
}

Rng rng_for(const SuiteConfig& config, PairKind kind) {
  return Rng(config.seed * 4 + static_cast<std::uint64_t>(kind));
}

Check exact_check(std::string name, const Rational& lhs, const Rational& rhs) {
  const double err = std::abs(to_double(lhs - rhs));
  return {std::move(name), format_rational(lhs), format_rational(rhs), err, 0.0, lhs == rhs};
}

Check numeric_check(std::string name, double lhs, double rhs, double tol) {
  const double err = std::abs(lhs - rhs);
  return {std::move(name), format_double(lhs), format_double(rhs), err, tol, err <= tol};
}

std::string pair_name(const std::string& what, const Permutation& sigma, const Permutation& tau) {
  return what + " sigma=" + sigma.to_string() + " tau=" + tau.to_string();
}

SuiteReport oracle_suite(const SuiteConfig& config) {
  const OracleConfig cfg = OracleConfig::make(config.params, config.n == 0 ? 3 : config.n);
  SuiteReport report{"oracle", {}};
  const auto perms = all_permutations(cfg.n);
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) {
      report.checks.push_back(exact_check(pair_name("oracle", sigma, tau), matrix_coefficient(cfg, sigma, tau),
                                          phi(cfg.params, sigma, tau)));
    }
  }
  return report;
}

SuiteReport cocycle_suite(const SuiteConfig& config) {
  SuiteReport report{"cocycle", {}};
  for (const PairSpec& pair : pairs_for(config)) {
    Rng rng = rng_for(config, pair.kind());
    for (std::size_t i = 0; i < config.samples; ++i) {
      const GroupElement g1 = random_element(rng, pair, config.window);
      const GroupElement g2 = random_element(rng, pair, config.window);
      const SparseTensor residual = check_cocycle(pair, g1, g2);
      const double err = std::sqrt(norm_sq(residual).evaluate(pair.s(), pair.t()));
      report.checks.push_back({"cocycle[" + to_string(pair.kind()) + "] g1=" + g1.to_string() + " g2=" + g2.to_string(),
                               residual.to_string(), "0", err, 0.0, residual.is_zero()});
    }
  }
  return report;
}

SuiteReport kinv_suite(const SuiteConfig& config) {
  SuiteReport report{"kinv", {}};
  for (const PairSpec& pair : pairs_for(config)) {
    Rng rng = rng_for(config, pair.kind());
    const std::string tag = "[" + to_string(pair.kind()) + "]";
    for (std::size_t i = 0; i < config.samples; ++i) {
      const GroupElement k = random_subgroup_element(rng, pair, config.window);
      const SparseTensor x = xi(pair, k);
      const double err = std::sqrt(norm_sq(x).evaluate(pair.s(), pair.t()));
      report.checks.push_back({"xi(k)=0" + tag + " k=" + k.to_string(), x.to_string(), "0", err, 0.0,
                               x.is_zero() && in_subgroup(pair, k)});
    }
    for (std::size_t i = 0; i < config.samples; ++i) {
      const GroupElement k1 = random_subgroup_element(rng, pair, config.window);
      const GroupElement g = random_element(rng, pair, config.window);
      const GroupElement k2 = random_subgroup_element(rng, pair, config.window);
      const QuadraticNorm lhs = norm_sq(xi(pair, compose(compose(k1, g), k2)));
      const QuadraticNorm rhs = norm_sq(xi(pair, g));
      const double err = std::abs(lhs.evaluate(pair.s(), pair.t()) - rhs.evaluate(pair.s(), pair.t()));
      report.checks.push_back({"|xi(k1 g k2)|=|xi(g)|" + tag + " g=" + g.to_string(), lhs.to_string(),
                               rhs.to_string(), err, 0.0, lhs == rhs});
    }
  }
  return report;
}

SuiteReport pair_a_suite(const SuiteConfig& config) {
  SuiteReport report{"pairA", {}};
  const PairSpec pair = PairSpec::make(PairKind::A, config.s);
  const double alpha = std::exp(-config.s * config.s);
  Rng rng = rng_for(config, PairKind::A);
  for (std::size_t i = 0; i < config.samples; ++i) {
    const GroupElement g = random_element(rng, pair, config.window);
    const auto moved = moved_count(g.parts[0], g.parts[1]);
    const QuadraticNorm lhs = norm_sq(xi(pair, g));
    const QuadraticNorm rhs{Rational(2 * moved), 0, 0};
    report.checks.push_back({"|xi|^2=2s^2*moved g=" + g.to_string(), lhs.to_string(), rhs.to_string(),
                             std::abs(lhs.evaluate(config.s) - rhs.evaluate(config.s)), 0.0, lhs == rhs});
    report.checks.push_back(numeric_check("spherical=psi g=" + g.to_string(), spherical(pair, g),
                                          psi(alpha, g.parts[0], g.parts[1]), 1e-12));
  }
  return report;
}

SuiteReport product_suite(const SuiteConfig& config) {
  SuiteReport report{"product", {}};
  const ThomaParams combined = combine(config.params, config.params2);
  for (const auto& sigma : all_permutations(config.n == 0 ? 4 : config.n)) {
    for (const auto& tau : all_permutations(config.n == 0 ? 4 : config.n)) {
      report.checks.push_back(exact_check(pair_name("product", sigma, tau), phi(combined, sigma, tau),
                                          phi(config.params, sigma, tau) * phi(config.params2, sigma, tau)));
    }
  }
  return report;
}

Check gram_check(const GramReport& g, const std::string& name) {
  return {"psd[" + name + "]", format_double(g.min_eigenvalue), format_double(-g.tolerance),
          std::max(0.0, -g.min_eigenvalue), g.tolerance, g.pass};
}

SuiteReport psd_suite(const SuiteConfig& config) {
  SuiteReport report{"psd", {}};
  {
    Rng rng(config.seed);
    const PairSpec shape = PairSpec::make(PairKind::A, 1.0);
    std::vector<GroupElement> elements;
    for (std::size_t i = 0; i < config.elements; ++i) elements.push_back(random_element(rng, shape, config.window));
    const ValueSource source = config.params;
    report.checks.push_back(gram_check(gram_psd(source, elements, config.tol), describe(source)));
  }
  for (const PairSpec& pair : pairs_for(config)) {
    Rng rng = rng_for(config, pair.kind());
    std::vector<GroupElement> elements;
    for (std::size_t i = 0; i < config.elements; ++i) elements.push_back(random_element(rng, pair, config.window));
    const ValueSource source = pair;
    report.checks.push_back(gram_check(gram_psd(source, elements, config.tol), describe(source)));
  }
  return report;
}

// Floating-point allowance on top of the analytic truncation bound.
constexpr double kRoundoff = 1e-14;

SuiteReport fock_suite(const SuiteConfig& config) {
  SuiteReport report{"fock", {}};
  if (config.v.empty()) throw std::invalid_argument("fock suite needs a non-empty --v");
  const auto dim = static_cast<unsigned>(config.v.size());
  const Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(config.v.data(), dim);
  const double target = std::exp(-0.5 * v.squaredNorm());
  const double value = vacuum_coefficient(AffinePoint::translation(v), config.degree).real();
  const double tail = vacuum_tail_bound(v.squaredNorm(), config.degree);
  report.checks.push_back(numeric_check("vacuum |v|^2=" + format_double(v.squaredNorm()) + " d=" +
                                            std::to_string(config.degree) + " (tol = tail bound)",
                                        value, target, tail + kRoundoff));

  const unsigned defect_degree = std::min(config.degree, 6u);
  Eigen::MatrixXd shift = Eigen::MatrixXd::Zero(dim, dim);
  for (unsigned i = 0; i < dim; ++i) shift((i + 1) % dim, i) = 1.0;
  const double perm_defect = unitarity_defect(shift, defect_degree);
  report.checks.push_back({"unitarity_defect cyclic shift dim=" + std::to_string(dim), format_double(perm_defect),
                           "0", perm_defect, 0.0, perm_defect == 0.0});

  Rng rng(config.seed);
  const double angle = std::uniform_real_distribution<double>(0.0, 2.0 * M_PI)(rng);
  Eigen::MatrixXd rot(2, 2);
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  const double rot_defect = unitarity_defect(rot, defect_degree);
  report.checks.push_back({"unitarity_defect rotation angle=" + format_double(angle), format_double(rot_defect), "0",
                           rot_defect, 1e-10, rot_defect <= 1e-10});
  return report;
}

SuiteReport sign_suite(const SuiteConfig& config) {
  SuiteReport report{"sign", {}};
  const ThomaParams beta_one = ThomaParams::make({}, {Rational(1)});
  for (const auto& sigma : all_permutations(config.n == 0 ? 5 : config.n)) {
    for (const auto& tau : all_permutations(config.n == 0 ? 5 : config.n)) {
      report.checks.push_back(exact_check(pair_name("sign", sigma, tau), phi(beta_one, sigma, tau),
                                          Rational(sign_by_inversions(compose(sigma, inverse(tau))))));
    }
  }
  return report;
}

}  // namespace

GramReport gram_psd(const ValueSource& source, const std::vector<GroupElement>& elements, double tol) {
  if (const auto* pair = std::get_if<PairSpec>(&source)) {
    for (const auto& g : elements) check_shape(*pair, g);
  }
  const std::size_t m = elements.size();
  std::vector<GroupElement> inverses;
  for (const auto& g : elements) inverses.push_back(inverse(g));

  std::vector<std::vector<ExactValue>> exact(m, std::vector<ExactValue>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) exact[i][j] = exact_value(source, compose(elements[i], inverses[j]));
  }
  Eigen::MatrixXd gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (exact[i][j] != exact[j][i]) {
        throw std::logic_error("Gram matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) +
                               "): Phi(g^-1) != Phi(g)");
      }
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_value(source, exact[i][j]);
    }
  }

  GramReport report;
  for (const auto& g : elements) report.elements.push_back(g.to_string());
  report.tolerance = tol;
  if (m == 0) {
    report.pass = true;
    return report;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver did not converge");
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.pass = report.min_eigenvalue >= -tol;
  return report;
}

RestrictedAffinePoint restrict_affine_action(const PairSpec& pair, const GroupElement& g) {
  const SparseTensor shift = xi(pair, g);
  const std::span<const Permutation> parts(g.parts);
  auto image = [&](const TensorIndex& idx) {
    TensorIndex out(idx.size());
    for (std::size_t f = 0; f < idx.size(); ++f) out[f] = parts[parts.size() == 1 ? 0 : f].apply(idx[f]);
    return out;
  };

  std::set<TensorIndex> coords;
  std::vector<TensorIndex> frontier;
  for (const auto& kv : shift.entries()) frontier.push_back(kv.first);
  while (!frontier.empty()) {
    TensorIndex idx = std::move(frontier.back());
    frontier.pop_back();
    if (!coords.insert(idx).second) continue;
    frontier.push_back(image(idx));
  }

  RestrictedAffinePoint out{{coords.begin(), coords.end()}, {}};
  std::map<TensorIndex, Eigen::Index> position;
  for (std::size_t i = 0; i < out.coordinates.size(); ++i) position[out.coordinates[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(out.coordinates.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  for (const auto& [idx, col] : position) {
    a(position.at(image(idx)), col) = 1.0;
    const Coefficient c = shift.at(idx);
    v(col) = to_double(c.s) * pair.s() + to_double(c.t) * pair.t();
  }
  out.point = AffinePoint::make(std::move(a), std::move(v));
  return out;
}

bool SuiteReport::pass() const noexcept { return failures() == 0; }

std::size_t SuiteReport::failures() const noexcept {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "oracle") return oracle_suite(config);
  if (name == "cocycle") return cocycle_suite(config);
  if (name == "kinv") return kinv_suite(config);
  if (name == "pairA") return pair_a_suite(config);
  if (name == "product") return product_suite(config);
  if (name == "psd") return psd_suite(config);
  if (name == "fock") return fock_suite(config);
  if (name == "sign") return sign_suite(config);
  throw std::invalid_argument("unknown suite \"" + name + "\"");
}

}  // namespace thoma
