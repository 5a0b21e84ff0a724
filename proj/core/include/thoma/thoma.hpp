#pragma once

#include <string>
#include <vector>

#include "thoma/permutation.hpp"
#include "thoma/rational.hpp"

namespace thoma {

/// Thoma parameters: two weakly decreasing finite sequences of positive
/// rationals alpha, beta with sum(alpha) + sum(beta) <= 1.
///
/// Equality is multiset equality; the sequences are always kept sorted in
/// decreasing order, so the defaulted comparison does the right thing.
class ThomaParams {
 public:
  /// Empty alpha and beta: phi is then the indicator of sigma == tau.
  ThomaParams() = default;

  static ThomaParams make(std::vector<Rational> alpha, std::vector<Rational> beta);

  /// Skips the sum <= 1 check (entries must still be positive). Used where the
  /// product formula is evaluated for a single alpha without normalisation.
  static ThomaParams make_unnormalised(std::vector<Rational> alpha, std::vector<Rational> beta);

  const std::vector<Rational>& alpha() const noexcept { return alpha_; }
  const std::vector<Rational>& beta() const noexcept { return beta_; }

  /// sum(alpha) + sum(beta)
  Rational total() const;

  /// "alpha=1/2,1/4 beta=1/4"
  std::string to_string() const;

  friend bool operator==(const ThomaParams&, const ThomaParams&) = default;

 private:
  std::vector<Rational> alpha_;
  std::vector<Rational> beta_;
};

/// Parses two comma-separated rational lists ("1/2,1/4", "1/4").
ThomaParams parse_params(std::string_view alpha, std::string_view beta);

/// sum_i alpha_i^k + (-1)^(k-1) sum_j beta_j^k, for k >= 2.
Rational power_sum(const ThomaParams& params, int k);

/// Spherical function of (S_inf x S_inf, diag) for the given parameters:
/// product over the nontrivial cycles of sigma * tau^-1 of power_sum(length).
Rational phi(const ThomaParams& params, const Permutation& sigma, const Permutation& tau);

/// alpha^(number of i with sigma(i) != tau(i)), for 0 < alpha <= 1.
double psi(double alpha, const Permutation& sigma, const Permutation& tau);
Rational psi(const Rational& alpha, const Permutation& sigma, const Permutation& tau);

/// Parameters of the product of two spherical functions:
/// alpha~ = {a_i a'_k} u {b_j b'_l}, beta~ = {a_i b'_l} u {b_j a'_k}.
ThomaParams combine(const ThomaParams& p, const ThomaParams& q);

}  // namespace thoma
