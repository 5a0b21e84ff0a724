#include "thoma/olshanski.hpp"

#include <numeric>
#include <stdexcept>

namespace thoma {

OracleConfig OracleConfig::make(ThomaParams params, std::uint32_t n) {
  if (params.total() != 1) {
    throw std::invalid_argument("the finite-rank construction needs sum(alpha) + sum(beta) = 1, got " +
                                format_rational(params.total()));
  }
  if (n < 1 || n > max_n) throw std::invalid_argument("oracle rank n must be in [1, 6]");
  if (params.alpha().size() + params.beta().size() > max_labels) {
    throw std::invalid_argument("oracle supports at most 4 parameters in total");
  }
  return OracleConfig{std::move(params), n};
}

int koszul_sign(const Permutation& p, std::span<const Parity> parities) {
  const std::size_t n = parities.size();
  if (p.max_index() > n) throw std::invalid_argument("koszul_sign: permutation moves a slot beyond n");
  if (p.regime() == Regime::signed_labels) throw std::invalid_argument("koszul_sign needs a plain permutation");

  // row[i] = original slot sitting at position i; sort by destination p(slot)
  // using adjacent swaps only.
  std::vector<std::uint32_t> row(n);
  std::iota(row.begin(), row.end(), 1u);
  auto destination = [&](std::uint32_t slot) { return p.apply(Label::plain(slot)).index; };
  int sign = 1;
  for (std::size_t pass = 0; pass < n; ++pass) {
    for (std::size_t i = 0; i + 1 < n - pass; ++i) {
      if (destination(row[i]) > destination(row[i + 1])) {
        if (parities[row[i] - 1] == Parity::odd && parities[row[i + 1] - 1] == Parity::odd) sign = -sign;
        std::swap(row[i], row[i + 1]);
      }
    }
  }
  return sign;
}

Rational matrix_coefficient(const OracleConfig& cfg, const Permutation& sigma, const Permutation& tau) {
  const std::uint32_t n = cfg.n;
  for (const Permutation* p : {&sigma, &tau}) {
    if (p->regime() == Regime::signed_labels) throw std::invalid_argument("oracle needs plain permutations");
    if (p->max_index() > n) throw std::invalid_argument("permutation " + p->to_string() + " does not fit in n brackets");
  }

  std::vector<GradedBasisLabel> labels;
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < cfg.params.alpha().size(); ++i) {
    labels.push_back({i, Parity::even});
    weights.push_back(cfg.params.alpha()[i]);
  }
  for (std::size_t j = 0; j < cfg.params.beta().size(); ++j) {
    labels.push_back({j, Parity::odd});
    weights.push_back(cfg.params.beta()[j]);
  }
  if (labels.empty()) return 0;

  // Bracket k holds u_{t_k} (x) u_{t_k}. After U(sigma, tau), bracket m holds
  // u_{t(sigma^-1 m)} (x) u_{t(tau^-1 m)}; it pairs with some term of
  // xi^{(x)n} only if both factors agree in every bracket. The square roots of
  // the weights on both sides multiply to prod_k w(t_k) because the surviving
  // assignment is a rearrangement of t.
  const Permutation sigma_inv = inverse(sigma);
  const Permutation tau_inv = inverse(tau);
  std::vector<std::uint32_t> from_sigma(n), from_tau(n);
  for (std::uint32_t m = 1; m <= n; ++m) {
    from_sigma[m - 1] = sigma_inv.apply(Label::plain(m)).index - 1;
    from_tau[m - 1] = tau_inv.apply(Label::plain(m)).index - 1;
  }

  std::vector<std::size_t> t(n, 0);
  std::vector<Parity> parities(n);
  Rational total = 0;
  while (true) {
    bool survives = true;
    for (std::uint32_t m = 0; m < n && survives; ++m) survives = t[from_sigma[m]] == t[from_tau[m]];
    if (survives) {
      Rational weight = 1;
      for (std::uint32_t k = 0; k < n; ++k) {
        weight *= weights[t[k]];
        parities[k] = labels[t[k]].parity;
      }
      const int sign = koszul_sign(sigma, parities) * koszul_sign(tau, parities);
      total += sign > 0 ? weight : Rational(-weight);
    }
    std::size_t k = 0;
    while (k < n && ++t[k] == labels.size()) t[k++] = 0;
    if (k == n) break;
  }
  return total;
}

OracleReport compare_with_phi(const OracleConfig& cfg) {
  OracleReport report;
  report.n = cfg.n;
  const auto perms = all_permutations(cfg.n);
  for (const auto& sigma : perms) {
    for (const auto& tau : perms) {
      const Rational oracle = matrix_coefficient(cfg, sigma, tau);
      const Rational formula = phi(cfg.params, sigma, tau);
      ++report.checked;
      if (oracle != formula) report.mismatches.push_back({sigma, tau, oracle, formula});
    }
  }
  return report;
}

}  // namespace thoma
