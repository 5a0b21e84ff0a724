#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "thoma/permutation.hpp"
#include "thoma/rational.hpp"
#include "thoma/thoma.hpp"

namespace thoma {

enum class Parity : std::uint8_t { even, odd };

/// Basis vector of the graded space H = H0 + H1: e_i (even, weight alpha_i)
/// or f_j (odd, weight beta_j). `index` is 0-based into the parameter list.
struct GradedBasisLabel {
  std::size_t index;
  Parity parity;

  friend bool operator==(const GradedBasisLabel&, const GradedBasisLabel&) = default;
};

/// Finite-rank truncation of the super tensor product of n copies of
/// (H (x) H, xi) with xi = sum sqrt(alpha_i) e_i(x)e_i + sum sqrt(beta_j) f_j(x)f_j.
struct OracleConfig {
  ThomaParams params;
  std::uint32_t n = 1;

  static constexpr std::uint32_t max_n = 6;
  static constexpr std::size_t max_labels = 4;

  /// Requires sum(alpha) + sum(beta) == 1 exactly (otherwise xi is not a unit
  /// vector), 1 <= n <= max_n and at most max_labels parameters in total.
  static OracleConfig make(ThomaParams params, std::uint32_t n);
};

/// Sign of the operator that moves tensor slot k to slot p(k) on homogeneous
/// vectors with the given parities: one factor -1 per adjacent swap of two odd
/// vectors along a bubble-sort decomposition of p.
int koszul_sign(const Permutation& p, std::span<const Parity> parities);

/// <U(sigma, tau) xi^{(x)n}, xi^{(x)n}>: sigma permutes the first factors of
/// the n brackets, tau the second factors. Exhaustive over assignments of
/// basis labels to brackets; exact.
Rational matrix_coefficient(const OracleConfig& cfg, const Permutation& sigma, const Permutation& tau);

struct OracleMismatch {
  Permutation sigma;
  Permutation tau;
  Rational oracle;
  Rational formula;
};

struct OracleReport {
  std::uint32_t n = 0;
  std::size_t checked = 0;
  std::vector<OracleMismatch> mismatches;

  bool pass() const noexcept { return mismatches.empty(); }
};

/// Sweeps S_n x S_n and compares matrix_coefficient with phi exactly.
OracleReport compare_with_phi(const OracleConfig& cfg);

}  // namespace thoma
