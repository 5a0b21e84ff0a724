#include "thoma/thoma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace thoma {

namespace {

void sort_and_check(std::vector<Rational>& seq, const char* name) {
  for (const auto& x : seq) {
    if (x <= 0) {
      throw std::invalid_argument(std::string(name) + " entries must be positive, got " + format_rational(x));
    }
  }
  std::sort(seq.begin(), seq.end(), std::greater<>());
}

void require_plain(const Permutation& p) {
  if (p.regime() == Regime::signed_labels) {
    throw std::invalid_argument("Thoma functions take plain-label permutations, got " + p.to_string());
  }
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += format_rational(xs[i]);
  }
  return out;
}

}  // namespace

ThomaParams ThomaParams::make_unnormalised(std::vector<Rational> alpha, std::vector<Rational> beta) {
  sort_and_check(alpha, "alpha");
  sort_and_check(beta, "beta");
  ThomaParams p;
  p.alpha_ = std::move(alpha);
  p.beta_ = std::move(beta);
  return p;
}

ThomaParams ThomaParams::make(std::vector<Rational> alpha, std::vector<Rational> beta) {
  ThomaParams p = make_unnormalised(std::move(alpha), std::move(beta));
  if (p.total() > 1) {
    throw std::invalid_argument("sum(alpha) + sum(beta) = " + format_rational(p.total()) + " exceeds 1");
  }
  return p;
}

Rational ThomaParams::total() const {
  Rational sum = 0;
  for (const auto& a : alpha_) sum += a;
  for (const auto& b : beta_) sum += b;
  return sum;
}

std::string ThomaParams::to_string() const {
  return "alpha=" + join(alpha_) + " beta=" + join(beta_);
}

ThomaParams parse_params(std::string_view alpha, std::string_view beta) {
  return ThomaParams::make(parse_rational_list(alpha), parse_rational_list(beta));
}

Rational power_sum(const ThomaParams& params, int k) {
  if (k < 2) throw std::invalid_argument("power_sum needs k >= 2");
  const auto e = static_cast<unsigned>(k);
  Rational a = 0;
  Rational b = 0;
  for (const auto& x : params.alpha()) a += pow(x, e);
  for (const auto& y : params.beta()) b += pow(y, e);
  return k % 2 == 0 ? Rational(a - b) : Rational(a + b);
}

Rational phi(const ThomaParams& params, const Permutation& sigma, const Permutation& tau) {
  require_plain(sigma);
  require_plain(tau);
  Rational value = 1;
  for (int len : cycle_type(compose(sigma, inverse(tau)))) value *= power_sum(params, len);
  return value;
}

double psi(double alpha, const Permutation& sigma, const Permutation& tau) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("psi needs 0 < alpha <= 1");
  return std::pow(alpha, static_cast<double>(moved_count(sigma, tau)));
}

Rational psi(const Rational& alpha, const Permutation& sigma, const Permutation& tau) {
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("psi needs 0 < alpha <= 1");
  return pow(alpha, static_cast<unsigned>(moved_count(sigma, tau)));
}

ThomaParams combine(const ThomaParams& p, const ThomaParams& q) {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  for (const auto& a : p.alpha()) {
    for (const auto& a2 : q.alpha()) alpha.push_back(a * a2);
    for (const auto& b2 : q.beta()) beta.push_back(a * b2);
  }
  for (const auto& b : p.beta()) {
    for (const auto& b2 : q.beta()) alpha.push_back(b * b2);
    for (const auto& a2 : q.alpha()) beta.push_back(b * a2);
  }
  return ThomaParams::make(std::move(alpha), std::move(beta));
}

}  // namespace thoma
