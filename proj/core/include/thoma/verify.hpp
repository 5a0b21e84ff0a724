#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "thoma/cocycle.hpp"
#include "thoma/fock.hpp"
#include "thoma/sparse_tensor.hpp"
#include "thoma/thoma.hpp"

namespace thoma {

/// Where a spherical function comes from: Thoma's product formula on
/// S x S, or exp(-|Xi|^2/2) for one of the affine constructions.
using ValueSource = std::variant<ThomaParams, PairSpec>;

std::string describe(const ValueSource& source);

struct GramReport {
  std::vector<std::string> elements;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Builds M_ij = Phi(g_i g_j^-1) exactly, checks M == M^T exactly (a
/// violation is a std::logic_error: Phi(g^-1) must equal Phi(g)), then
/// certifies min eig(M) >= -tol with a dense symmetric eigensolver.
GramReport gram_psd(const ValueSource& source, const std::vector<GroupElement>& elements, double tol = 1e-9);

/// Phi(g) for a value source, as a double.
double spherical_value(const ValueSource& source, const GroupElement& g);

/// A pair element's affine isometry restricted to the finite coordinate set
/// spanned by supp Xi(g) and its orbit under U(g), as a point of Isom(R^n).
struct RestrictedAffinePoint {
  std::vector<TensorIndex> coordinates;
  AffinePoint point;
};

RestrictedAffinePoint restrict_affine_action(const PairSpec& pair, const GroupElement& g);

struct Check {
  std::string name;
  std::string lhs;
  std::string rhs;
  double abs_err = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool pass() const noexcept;
  std::size_t failures() const noexcept;
};

/// Knobs shared by the verification suites. Defaults reproduce the
/// documented runs.
struct SuiteConfig {
  ThomaParams params = ThomaParams::make({Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)});
  /// Second parameter set for the product suite.
  ThomaParams params2 = ThomaParams::make({Rational(1, 3)}, {Rational(1, 3), Rational(1, 6)});
  /// Restrict pair-based suites to one kind; all four otherwise.
  std::optional<PairKind> pair;
  double s = 0.7;
  double t = 0.4;
  /// Rank for the oracle/product/sign sweeps; 0 picks the suite default.
  std::uint32_t n = 0;
  std::size_t samples = 200;
  std::size_t elements = 40;
  std::uint32_t window = 6;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  unsigned degree = 12;
  std::vector<double> v = {1.0};
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"oracle", "cocycle", "kinv", "pairA",
                                                 "product", "psd", "fock", "sign"};
  return names;
}

/// Runs one invariant battery. Throws std::invalid_argument for an unknown
/// suite or a config the suite cannot use.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double x);

}  // namespace thoma
