#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "thoma/fock.hpp"

using namespace thoma;

namespace {

using Poly = TruncatedPolynomial;

Poly random_poly(std::mt19937_64& rng, unsigned n, unsigned max_deg, unsigned d) {
  std::normal_distribution<double> gauss;
  Poly f(n, d);
  for (const auto& a : monomial_basis(n, max_deg)) f.add_term(a, {gauss(rng), gauss(rng)});
  return f;
}

Eigen::MatrixXd rotation(double theta) {
  Eigen::MatrixXd r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace

TEST(Fock, InnerProductExamples) {
  const auto one = Poly::constant(2, 4);
  EXPECT_EQ(fock_inner(one, one), Complex(1.0));
  EXPECT_EQ(fock_inner(Poly::variable(2, 4, 0), Poly::variable(2, 4, 1)), Complex(0.0));
  const auto z1sq = Poly::monomial(1, 4, {2});
  EXPECT_EQ(fock_inner(z1sq, z1sq), Complex(2.0));
  EXPECT_EQ(fock_inner(Poly::monomial(2, 6, {3, 2}), Poly::monomial(2, 6, {3, 2})), Complex(12.0));
  EXPECT_THROW(fock_inner(Poly(1, 2), Poly(2, 2)), std::invalid_argument);
}

// Gaussian-measure quadrature over C, independent of the monomial rule.
TEST(Fock, InnerProductMatchesQuadrature) {
  const double z2 = oracle::gaussian_integral_2d([](double x, double y) {
    const double r2 = x * x + y * y;
    return r2 * r2;
  });
  EXPECT_NEAR(z2, 2.0, 1e-6);
  const auto z1sq = Poly::monomial(1, 4, {2});
  EXPECT_NEAR(fock_inner(z1sq, z1sq).real(), z2, 1e-6);
  // <z, z^2> = (1/pi) int z conj(z)^2 e^{-|z|^2} = 0; real part x(x^2 - y^2) + 2xy^2.
  const double cross = oracle::gaussian_integral_2d([](double x, double y) { return x * (x * x - y * y) + 2 * x * y * y; });
  EXPECT_NEAR(cross, 0.0, 1e-6);
}

TEST(Fock, PolynomialBookkeeping) {
  Poly f(2, 3);
  f.add_term({1, 1}, 2.0);
  f.add_term({1, 1}, -2.0);
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term({3, 1}, 1.0), std::invalid_argument);
  EXPECT_THROW(f.add_term({1}, 1.0), std::invalid_argument);
  EXPECT_THROW(Poly(17, 2), std::invalid_argument);
  EXPECT_THROW(Poly(2, 16), std::invalid_argument);
  const auto g = Poly::monomial(2, 3, {2, 1}, 3.0);
  EXPECT_EQ(g.degree(), 3u);
  EXPECT_EQ(g.embed(3).coefficient({2, 1, 0}), Complex(3.0));
  EXPECT_TRUE(g.truncate(2).is_zero());
  EXPECT_EQ(monomial_basis(2, 2).size(), 6u);
  EXPECT_EQ(monomial_basis(3, 4).size(), 35u);
}

TEST(ExpOrthogonal, Examples) {
  const auto f = Poly::variable(2, 3, 0);
  EXPECT_EQ(exp_orthogonal(Eigen::MatrixXd::Identity(2, 2), f).terms(), f.terms());
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_EQ(exp_orthogonal(swap, f).terms(), Poly::variable(2, 3, 1).terms());
  Eigen::MatrixXd scale = 2.0 * Eigen::MatrixXd::Identity(2, 2);
  EXPECT_THROW(exp_orthogonal(scale, f), std::invalid_argument);
  EXPECT_THROW(exp_orthogonal(Eigen::MatrixXd::Identity(3, 3), f), std::invalid_argument);
}

TEST(UnitarityDefect, Examples) {
  EXPECT_EQ(unitarity_defect(Eigen::MatrixXd::Identity(3, 3), 6), 0.0);
  Eigen::MatrixXd cyc = Eigen::MatrixXd::Zero(3, 3);
  cyc(0, 1) = cyc(1, 2) = cyc(2, 0) = 1.0;
  EXPECT_EQ(unitarity_defect(cyc, 6), 0.0);
  EXPECT_LE(unitarity_defect(rotation(0.3), 6), 1e-10);
}

TEST(ExpOrthogonal, PreservesInnerProducts) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_poly(rng, 2, 4, 4);
    const auto g = random_poly(rng, 2, 4, 4);
    const auto r = rotation(0.1 * i + 0.05);
    const Complex before = fock_inner(f, g);
    const Complex after = fock_inner(exp_orthogonal(r, f), exp_orthogonal(r, g));
    ASSERT_NEAR(std::abs(before - after), 0.0, 1e-9 * (1.0 + std::abs(before)));
  }
}

TEST(ExpTranslation, ZeroVectorIsIdentity) {
  std::mt19937_64 rng(1);
  const auto f = random_poly(rng, 2, 3, 6);
  const auto g = exp_translation(Eigen::VectorXd::Zero(2), f, 6);
  EXPECT_EQ(fock_norm(g - f), 0.0);
  EXPECT_THROW(exp_translation(Eigen::VectorXd::Zero(3), f, 6), std::invalid_argument);
  EXPECT_THROW(exp_translation(Eigen::VectorXd::Zero(2), f, 2), std::invalid_argument);
}

TEST(ExpTranslation, InverseConvergesWithDegree) {
  Eigen::VectorXd v(2);
  v << 0.6, -0.3;
  double previous = INFINITY;
  for (unsigned d = 2; d <= 14; d += 4) {
    const auto one = Poly::constant(2, d);
    const auto back = exp_translation(-v, exp_translation(v, one, d), d);
    const double err = fock_norm(back - one);
    EXPECT_LT(err, previous) << "d=" << d;
    previous = err;
  }
  EXPECT_LT(previous, 1e-6);
}

// A truncated Exp(v) is approximately isometric on low-degree vectors.
TEST(ExpTranslation, ApproximatelyUnitaryOnRandomVectors) {
  std::mt19937_64 rng(4);
  Eigen::VectorXd v(2);
  v << 0.3, 0.2;
  for (int i = 0; i < 10; ++i) {
    const auto f = random_poly(rng, 2, 2, 15);
    const auto g = random_poly(rng, 2, 2, 15);
    const Complex before = fock_inner(f, g);
    const Complex after = fock_inner(exp_translation(v, f, 15), exp_translation(v, g, 15));
    ASSERT_LT(std::abs(before - after), 1e-8 * (1.0 + std::abs(before)));
  }
}

TEST(VacuumCoefficient, Examples) {
  Eigen::MatrixXd cyc = Eigen::MatrixXd::Zero(3, 3);
  cyc(0, 1) = cyc(1, 2) = cyc(2, 0) = 1.0;
  EXPECT_EQ(vacuum_coefficient(AffinePoint::make(cyc, Eigen::VectorXd::Zero(3)), 8), Complex(1.0));
  Eigen::VectorXd v(1);
  v << 1.0;
  for (unsigned d = 10; d <= 15; ++d) {
    EXPECT_NEAR(vacuum_coefficient(AffinePoint::translation(v), d).real(), std::exp(-0.5), 1e-8);
  }
}

TEST(VacuumCoefficient, WithinTailBound) {
  for (double n2 : {0.25, 1.0, 4.0}) {
    Eigen::VectorXd v(2);
    v << std::sqrt(n2 / 2), -std::sqrt(n2 / 2);
    for (unsigned d : {4u, 8u, 12u}) {
      const double err = std::abs(vacuum_coefficient(AffinePoint::translation(v), d) - Complex(std::exp(-n2 / 2)));
      EXPECT_LE(err, vacuum_tail_bound(n2, d) + 1e-14) << n2 << " " << d;
    }
  }
  EXPECT_GT(vacuum_tail_bound(4.0, 4), vacuum_tail_bound(4.0, 8));
  EXPECT_NEAR(vacuum_tail_bound(2.0, 0), std::exp(1.0) - 1.0, 1e-14);
}

TEST(AffinePoint, ComposeAndValidate) {
  Eigen::VectorXd v1(2), v2(2);
  v1 << 1, 0;
  v2 << 0, 2;
  Eigen::MatrixXd swap(2, 2);
  swap << 0, 1, 1, 0;
  const auto c = compose(AffinePoint::make(swap, v1), AffinePoint::make(swap, v2));
  EXPECT_TRUE(c.a.isApprox(Eigen::MatrixXd::Identity(2, 2)));
  EXPECT_DOUBLE_EQ(c.v(0), 3.0);
  EXPECT_DOUBLE_EQ(c.v(1), 0.0);
  EXPECT_THROW(AffinePoint::make(2.0 * swap, v1), std::invalid_argument);
  EXPECT_THROW(AffinePoint::make(swap, Eigen::VectorXd::Zero(3)), std::invalid_argument);
}

TEST(OrthogonalityDefect, Examples) {
  EXPECT_EQ(orthogonality_defect(Eigen::MatrixXd::Identity(4, 4)), 0.0);
  EXPECT_LT(orthogonality_defect(rotation(1.1)), 1e-15);
  EXPECT_NEAR(orthogonality_defect(2.0 * Eigen::MatrixXd::Identity(2, 2)), 3.0, 1e-15);
}
