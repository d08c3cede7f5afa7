#include <gtest/gtest.h>

#include "bloch/bounds.hpp"
#include "bloch/families.hpp"
#include "bloch/verifier.hpp"

using namespace bloch;

TEST(Bounds, IdNamesRoundTrip) {
  for (const auto id : {BoundId::basic, BoundId::prop1, BoundId::thm1_B, BoundId::thm1_B2, BoundId::thm2,
                        BoundId::thm3, BoundId::cor1, BoundId::cor2, BoundId::thm5}) {
    EXPECT_EQ(bound_id_from_string(to_string(id)), id);
  }
  EXPECT_THROW(bound_id_from_string("thm9"), InvalidArgument);
}

TEST(Bounds, Basic) {
  EXPECT_EQ(bound_basic(0.0), 1.0);
  EXPECT_NEAR(bound_basic(constants::inv_sqrt3), 9.0 / 4.0, 1e-14);
  for (int n = 1; n <= 8; ++n) EXPECT_NEAR(bound_basic(r_star(n)), std::pow((n + 2) / 2.0, 2), 1e-12);
  EXPECT_THROW(bound_basic(1.0), InvalidArgument);
}

TEST(Bounds, TailIndexRadius) {
  EXPECT_NEAR(r_star(1), 0.5773502691896258, 1e-15);
  EXPECT_NEAR(r_star(2), std::sqrt(0.5), 1e-15);
  EXPECT_NEAR(bound_prop1(1, constants::inv_sqrt3), 9.0 / 4.0, 1e-14);
  for (int n = 1; n <= 6; ++n) EXPECT_NEAR(bound_prop1(n, r_star(n)), bound_basic(r_star(n)), 1e-12);
  EXPECT_THROW(bound_prop1(1, 0.6), InvalidArgument);
  EXPECT_THROW(bound_prop1(0, 0.1), InvalidArgument);
  EXPECT_EQ(bound_prop1(3, 0.0), 0.0);
}

TEST(Bounds, AdmissibleRadius) {
  EXPECT_NEAR(r_admissible(0.0), constants::inv_sqrt3, 1e-15);
  EXPECT_NEAR(r_admissible(constants::inv_sqrt3), 0.0, 1e-15);
  // a <= 3/5 forces x <= x(3/5) = 0.2458, where the radius still exceeds 0.38 > R;
  // the looser x <= 0.287 would not (r_admissible(0.287) = 0.348)
  const double x35 = x_of_a(0.6);
  EXPECT_NEAR(x35, 0.245789, 1e-6);
  EXPECT_GE(r_admissible(x35), 0.38);
  EXPECT_GE(0.38, constants::sharp_R);
  EXPECT_NEAR(r_admissible(0.287), 0.348016, 1e-6);
  // the map x -> r_admissible(x) is an involution
  for (const double x : {0.05, 0.2, 0.4}) EXPECT_NEAR(r_admissible(r_admissible(x)), x, 1e-14);
  EXPECT_THROW(r_admissible(0.6), InvalidArgument);
}

TEST(Bounds, LeadingOrderNearZero) {
  const double x = 0.2, r = 1e-4;
  const double a2 = a_of_x(x) * a_of_x(x);
  EXPECT_NEAR(bound_thm1_B(x, r) / (r * r) / a2, 1.0, 1e-6);
  EXPECT_NEAR(bound_thm1_B2(x, r) / (r * r) / a2, 1.0, 1e-6);
}

TEST(Bounds, ClosedFormsEqualFamilySums) {
  const double x = 0.25, r = 0.3;
  const std::size_t N = 256;
  EXPECT_NEAR(family_power_sum(x, r, 2, N), bound_thm1_B(x, r), 1e-10 + tail_majorant_extremal(x, r, 2, N));
  EXPECT_NEAR(family_power_sum(x, r, 1, N), bound_thm1_B2(x, r), 1e-10 + tail_majorant_extremal(x, r, 1, N));
  for (const double xx : {0.05, 0.3, 0.5}) {
    const double rr = r_admissible(xx);
    EXPECT_NEAR(family_power_sum(xx, rr, 2, N), bound_thm1_B(xx, rr), 1e-10 * (1.0 + bound_thm1_B(xx, rr)));
  }
}

TEST(Bounds, AdmissibleDomainEnforced) {
  EXPECT_THROW(bound_thm1_B(0.3, 0.4), InvalidArgument);
  EXPECT_THROW(bound_thm1_B2(0.0, 0.1), InvalidArgument);
  EXPECT_NO_THROW(bound_thm1_B(0.3, r_admissible(0.3)));
}

TEST(Bounds, LogarithmicBound) {
  EXPECT_EQ(bound_cor1(0.5, 0.0), 0.0);
  for (const double a : {0.2, 0.5, 0.9}) {
    const double r = 1e-3;
    EXPECT_NEAR(bound_cor1(a, r) / std::pow(r, 4), std::pow(9.0 - 4.0 * a * a, 2) / 24.0,
                1e-5 * std::pow(9.0 - 4.0 * a * a, 2));
  }
  // -log(1-w) - w summed term by term
  const double a = 0.75, r = 0.37;
  const double w = 4.0 * a * a * r * r / 3.0;
  const double c = 3.0 * std::pow(9.0 - 4.0 * a * a, 2) / (64.0 * std::pow(a, 4));
  double direct = 0.0;
  double wk = w;
  for (int k = 2; k < 400; ++k) {
    wk *= w;
    direct += c * wk / k;
  }
  EXPECT_GT(bound_cor1(a, r), 0.0);
  EXPECT_NEAR(bound_cor1(a, r), direct, 1e-14);
  EXPECT_THROW(bound_cor1(0.0, 0.1), InvalidArgument);
  EXPECT_THROW(bound_cor1(0.5, 0.6), InvalidArgument);
}

TEST(Bounds, LogarithmicBoundFromMajorantCoefficients) {
  // k b_k = 3^{(k-1)/2} H_{k-1}: the extremal coefficients allowed by
  // F'(z/sqrt3) subordinate to H give back B_a(r).
  const double a = 0.75, r = 0.37;
  const auto H = h_series(a, 600);
  double sum = 0.0;
  for (std::size_t k = 2; k <= 600; ++k) {
    const double bk = std::abs(H[k - 1]) * std::pow(constants::sqrt3, static_cast<double>(k - 1)) / k;
    sum += k * bk * bk * std::pow(r, 2.0 * k);
  }
  EXPECT_NEAR(sum, bound_cor1(a, r), 1e-12);
}

TEST(Bounds, FourthPowerConstants) {
  EXPECT_NEAR(constants::thm2_lower, 0.516398, 1e-6);
  EXPECT_NEAR(constants::thm3_lower, 0.395335, 1e-6);
  EXPECT_NEAR(constants::sharp_R, std::sqrt(59.0 - std::sqrt(2713.0)) / (4.0 * std::sqrt(3.0)), 1e-16);
  EXPECT_NEAR(constants::sharp_R, 0.3795154, 1e-7);
  EXPECT_NEAR(thm_rhs(BoundId::thm2, 0.55), 6.75 * std::pow(0.55, 4), 1e-15);
  EXPECT_NEAR(thm_rhs(BoundId::thm5, 0.5), 27.0 / 8.0 * 0.0625, 1e-15);
  EXPECT_NO_THROW(thm_rhs(BoundId::thm5, constants::sharp_R));
  EXPECT_THROW(thm_rhs(BoundId::thm2, 0.5), InvalidArgument);
  EXPECT_THROW(thm_rhs(BoundId::thm5, 0.6), InvalidArgument);
  EXPECT_THROW(thm_rhs(BoundId::basic, 0.5), InvalidArgument);
  EXPECT_NO_THROW(thm_rhs(BoundId::cor2, 0.0));
}

TEST(Bounds, DegreeEightPolynomial) {
  EXPECT_EQ(critical_poly(0.0), -4.0);
  EXPECT_EQ(critical_poly(1.0), 32.0);
  const auto res = critical_root();
  EXPECT_NEAR(std::sqrt(res.root), 0.39466, 5e-5);
  EXPECT_GT(res.root, 0.15);
  EXPECT_LT(res.root, 0.16);
}
