#include <gtest/gtest.h>

#include <numbers>

#include "bloch/families.hpp"
#include "bloch/verifier.hpp"

using namespace bloch;

TEST(Families, AOfXEndpointsAndSample) {
  EXPECT_EQ(a_of_x(0.0), 0.0);
  EXPECT_NEAR(a_of_x(constants::inv_sqrt3), 1.0, 1e-15);
  EXPECT_NEAR(a_of_x(0.2), 0.3 * std::sqrt(3.0) * 0.96, 1e-15);
  EXPECT_NEAR(a_of_x(0.2), 0.49883, 1e-5);
  EXPECT_THROW(a_of_x(-0.1), InvalidArgument);
  EXPECT_THROW(a_of_x(0.6), InvalidArgument);
}

TEST(Families, RegionInvariants) {
  double prev = 0.0;
  for (int i = 1; i < 500; ++i) {
    const double x = constants::inv_sqrt3 * i / 500.0;
    const auto p = extremal_parameter(x);
    EXPECT_GT(p.a, 0.0);
    EXPECT_LT(p.a, 1.0);
    EXPECT_GE(p.b2max, 0.0);
    EXPECT_GT(p.a, prev);
    prev = p.a;
  }
}

TEST(Families, InverseOfA) {
  const double x = x_of_a(0.75);
  EXPECT_LE(std::abs(a_of_x(x) - 0.75), 1e-12);
  EXPECT_LT(x_of_a(1e-9), 1e-8);
  EXPECT_NEAR(x_of_a(1.0 - 1e-12), constants::inv_sqrt3, 1e-5);
  for (const double x0 : {0.01, 0.1, 0.3, 0.5}) EXPECT_NEAR(x_of_a(a_of_x(x0)), x0, 1e-12);
  EXPECT_THROW(x_of_a(0.0), InvalidArgument);
  EXPECT_THROW(x_of_a(1.0), InvalidArgument);
}

TEST(Families, BoundaryFamilyLeadingCoefficients) {
  for (const double x : {0.05, 0.2, 0.4, 0.55}) {
    const auto g = g_prime_coeffs(x, 16);
    EXPECT_NEAR(g[0].real(), a_of_x(x), 1e-15);
    const double b2 = 0.75 * std::sqrt(3.0) * (1.0 - x * x) * (1.0 - 3.0 * x * x);
    EXPECT_NEAR(std::abs(g[1]) / 2.0, b2, 1e-13);
    EXPECT_NEAR(b2, b2max_of_x(x), 1e-15);
  }
}

TEST(Families, ClosedFormMatchesBinomialExpansion) {
  const auto g = g_prime_coeffs(0.25, 64);
  const auto h = rational_expand_g(0.25, 64);
  for (std::size_t k = 0; k <= 64; ++k) EXPECT_NEAR(std::abs(g[k] - h[k]), 0.0, 1e-13) << "k=" << k;
}

TEST(Families, ThirdCoefficientByHand) {
  const double x = 0.1, a = a_of_x(x);
  const auto h = rational_expand_g(x, 8);
  // entry 2 = 3 A_3 with A_3 = (a/2)(2x^2 + 2(x^2 - 1))
  EXPECT_NEAR(h[2].real(), 3.0 * a * (2.0 * x * x - 1.0), 1e-14);
}

TEST(Families, SeriesMatchesRationalFunction) {
  const double x = 0.3, a = a_of_x(x);
  const auto g = g_prime_coeffs(x, 200);
  for (const complex z : {complex(0.3, 0.2), complex(-0.5, 0.1), complex(0.0, 0.7)}) {
    const complex direct = -(a / x) * (z - x) / std::pow(1.0 - z * x, 3);
    EXPECT_NEAR(std::abs(g(z) - direct), 0.0, 1e-12);
  }
}

TEST(Families, GuardedDomain) {
  EXPECT_THROW(g_prime_coeffs(0.0, 4), InvalidArgument);
  EXPECT_THROW(g_prime_coeffs(constants::inv_sqrt3, 4), InvalidArgument);
  EXPECT_THROW(rational_expand_g(1e-7, 4), InvalidArgument);
}

TEST(Families, MonomialExtremals) {
  EXPECT_NEAR(f_n_prime(1)[1].real(), 1.5 * std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(f_n_prime(2)[2].real(), 4.0, 1e-15);
  EXPECT_THROW(f_n_prime(0), InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    const auto s = f_n_prime(n);
    EXPECT_TRUE(membership_consistent(s, 400, 16, 1e-9)) << "n=" << n;
    // (1 - r^2) c r^n peaks at r_n with value 1
    const double rn = std::sqrt(n / (n + 2.0));
    EXPECT_NEAR((1.0 - rn * rn) * std::abs(s(rn)), 1.0, 1e-14);
  }
}

TEST(Families, MoebiusMajorant) {
  const double a = 0.5;
  const auto h = h_series(a, 200);
  EXPECT_EQ(h[0].real(), a);
  EXPECT_NEAR(h[1].real(), (9.0 - 4.0 * a * a) / 6.0, 1e-15);
  for (int j = 0; j < 64; ++j) {
    const complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 64.0);
    const complex c = 2.0 * a / 3.0;
    EXPECT_NEAR(std::abs(1.5 * (z + c) / (1.0 + c * z)), 1.5, 1e-14);
    // the truncated series converges geometrically with ratio 1/3
    EXPECT_NEAR(std::abs(h(z)), 1.5, 1e-12);
  }
}

TEST(Families, MembershipScan) {
  const auto one = CoefficientSeries({1.0, 0.0, 0.0}, SeriesKind::derivative);
  EXPECT_DOUBLE_EQ(bloch_membership_scan(one, 64, 16), 1.0);
  const auto two = CoefficientSeries({2.0, 0.0}, SeriesKind::derivative);
  EXPECT_DOUBLE_EQ(bloch_membership_scan(two, 64, 16), 2.0);
  EXPECT_FALSE(membership_consistent(two, 64, 16, 1e-9));
  EXPECT_LE(bloch_membership_scan(g_prime_coeffs(0.3, 256), 200, 128), 1.0 + 1e-6);
  EXPECT_THROW(bloch_membership_scan(one, 4, 16), InvalidArgument);
}

TEST(Families, ComposedSamplesStayInClass) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto s = random_bloch_sample(rng, 256);
    EXPECT_TRUE(membership_consistent(s.derivative, 120, 64, 1e-6)) << "sample " << i;
  }
}
