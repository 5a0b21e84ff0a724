#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "support/oracles.hpp"
#include "thoma/olshanski.hpp"
#include "thoma/random.hpp"

using namespace thoma;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }
Rational R(long p, long q = 1) { return Rational(p, q); }
const Permutation kE{};

constexpr Parity kEven = Parity::even;
constexpr Parity kOdd = Parity::odd;

std::vector<oracle::DenseLabel> dense_labels(const ThomaParams& params) {
  std::vector<oracle::DenseLabel> out;
  for (const auto& a : params.alpha()) out.push_back({false, std::sqrt(to_double(a))});
  for (const auto& b : params.beta()) out.push_back({true, std::sqrt(to_double(b))});
  return out;
}

}  // namespace

TEST(KoszulSign, Examples) {
  const std::vector<Parity> odd2 = {kOdd, kOdd};
  const std::vector<Parity> mixed = {kOdd, kEven};
  const std::vector<Parity> even2 = {kEven, kEven};
  EXPECT_EQ(koszul_sign(kE, odd2), 1);
  EXPECT_EQ(koszul_sign(P("(1 2)"), odd2), -1);
  EXPECT_EQ(koszul_sign(P("(1 2)"), mixed), 1);
  EXPECT_EQ(koszul_sign(P("(1 2)"), even2), 1);
  const std::vector<Parity> too_short = {kOdd};
  EXPECT_THROW(koszul_sign(P("(1 2)"), too_short), std::invalid_argument);
}

// Against a count of inverted odd pairs, and the parity restricted to odd
// slots behaves like the ordinary sign.
TEST(KoszulSign, MatchesOddInversionCount) {
  for (std::uint32_t n = 1; n <= 5; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Parity> par(n);
      for (std::uint32_t i = 0; i < n; ++i) par[i] = (mask >> i) & 1 ? kOdd : kEven;
      for (const auto& p : all_permutations(n)) {
        const auto im = oracle::images(p, n);
        int inv = 0;
        for (std::uint32_t i = 0; i < n; ++i)
          for (std::uint32_t j = i + 1; j < n; ++j) inv += im[i] > im[j] && par[i] == kOdd && par[j] == kOdd;
        ASSERT_EQ(koszul_sign(p, par), inv % 2 ? -1 : 1);
        if (mask == (1u << n) - 1) ASSERT_EQ(koszul_sign(p, par), sign(p));
        if (mask == 0) ASSERT_EQ(koszul_sign(p, par), 1);
      }
    }
  }
}

TEST(KoszulSign, IsMultiplicativeAlongParityTransport) {
  Rng rng(9);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_permutation(rng, 5);
    const auto q = random_permutation(rng, 5);
    std::vector<Parity> par(5);
    for (auto& x : par) x = rng() & 1 ? kOdd : kEven;
    // Applying q moves parities to new slots; p then acts on the moved list.
    std::vector<Parity> moved(5);
    for (std::uint32_t k = 1; k <= 5; ++k) moved[q(Label::plain(k)).index - 1] = par[k - 1];
    ASSERT_EQ(koszul_sign(compose(p, q), par), koszul_sign(p, moved) * koszul_sign(q, par));
  }
}

TEST(OracleConfig, Validation) {
  EXPECT_NO_THROW(OracleConfig::make(ThomaParams::make({R(1)}, {}), 3));
  EXPECT_THROW(OracleConfig::make(ThomaParams::make({R(1, 2)}, {}), 3), std::invalid_argument);
  EXPECT_THROW(OracleConfig::make(ThomaParams::make({R(1)}, {}), 0), std::invalid_argument);
  EXPECT_THROW(OracleConfig::make(ThomaParams::make({R(1)}, {}), 7), std::invalid_argument);
  EXPECT_THROW(OracleConfig::make(ThomaParams::make({R(1, 5), R(1, 5), R(1, 5), R(1, 5), R(1, 5)}, {}), 2),
               std::invalid_argument);
}

TEST(MatrixCoefficient, Examples) {
  const auto beta1 = OracleConfig::make(ThomaParams::make({}, {R(1)}), 2);
  EXPECT_EQ(matrix_coefficient(beta1, P("(1 2)"), kE), R(-1));
  const auto half = OracleConfig::make(ThomaParams::make({R(1, 2), R(1, 2)}, {}), 2);
  EXPECT_EQ(matrix_coefficient(half, P("(1 2)"), kE), R(1, 2));
  const auto one = OracleConfig::make(ThomaParams::make({R(1)}, {}), 2);
  for (const auto& sigma : all_permutations(2))
    for (const auto& tau : all_permutations(2)) EXPECT_EQ(matrix_coefficient(one, sigma, tau), R(1));
  const auto mixed = OracleConfig::make(ThomaParams::make({R(1, 2), R(1, 4)}, {R(1, 4)}), 3);
  for (const auto& sigma : all_permutations(3)) EXPECT_EQ(matrix_coefficient(mixed, sigma, sigma), R(1));
  EXPECT_THROW(matrix_coefficient(half, P("(1 3)"), kE), std::invalid_argument);
}

// The same number from an explicit vector in V^{(x)2n} with the slots
// interleaved, the Koszul sign by inverted odd pairs and floating weights.
TEST(MatrixCoefficient, MatchesDenseInterleavedOracle) {
  const std::vector<ThomaParams> sets = {
      ThomaParams::make({}, {R(1)}), ThomaParams::make({R(1, 2), R(1, 4)}, {R(1, 4)}),
      ThomaParams::make({}, {R(1, 2), R(1, 2)}), ThomaParams::make({R(1, 3)}, {R(1, 3), R(1, 3)})};
  for (const auto& params : sets) {
    const auto labels = dense_labels(params);
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const auto cfg = OracleConfig::make(params, n);
      for (const auto& sigma : all_permutations(n)) {
        for (const auto& tau : all_permutations(n)) {
          ASSERT_NEAR(to_double(matrix_coefficient(cfg, sigma, tau)),
                      oracle::dense_super_coefficient(labels, n, sigma, tau), 1e-12)
              << params.to_string() << " " << sigma.to_string() << " " << tau.to_string();
        }
      }
    }
  }
}

TEST(CompareWithPhi, SmallRuns) {
  const auto r3 = compare_with_phi(OracleConfig::make(ThomaParams::make({R(1, 2), R(1, 2)}, {}), 3));
  EXPECT_TRUE(r3.pass());
  EXPECT_EQ(r3.checked, 36u);
  const auto sign3 = compare_with_phi(OracleConfig::make(ThomaParams::make({}, {R(1)}), 3));
  EXPECT_TRUE(sign3.pass());
  for (const auto& sigma : all_permutations(3))
    for (const auto& tau : all_permutations(3))
      EXPECT_EQ(matrix_coefficient(OracleConfig::make(ThomaParams::make({}, {R(1)}), 3), sigma, tau),
                R(oracle::inversion_sign(compose(sigma, inverse(tau)), 3)));
}

TEST(CompareWithPhi, RankFourMixedParameters) {
  const auto report = compare_with_phi(OracleConfig::make(ThomaParams::make({R(1, 2), R(1, 4)}, {R(1, 4)}), 4));
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.checked, 576u);
}
