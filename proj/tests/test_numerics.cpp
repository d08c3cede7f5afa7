#include <gtest/gtest.h>

#include <cmath>

#include "bloch/bounds.hpp"
#include "bloch/families.hpp"
#include "bloch/numerics.hpp"
#include "bloch/verifier.hpp"

using namespace bloch;
using namespace bloch::numerics;

TEST(Bisect, LinearRoot) {
  const auto res = bisect([](double y) { return y - 0.5; }, 0.0, 1.0, 1e-12);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(res.root, 0.5, 1e-12);
}

TEST(Bisect, BracketWidthAndContainment) {
  const auto res = bisect([](double y) { return y * y - 2.0; }, 0.0, 2.0, 1e-10);
  EXPECT_TRUE(res.converged);
  EXPECT_LE(res.hi - res.lo, 1e-10);
  EXPECT_LE(res.lo, res.root);
  EXPECT_LE(res.root, res.hi);
  EXPECT_NEAR(res.root, std::sqrt(2.0), 1e-10);
}

TEST(Bisect, ResidualShrinksWithIterations) {
  auto f = [](double y) { return std::cos(y) - y; };
  double prev = std::numeric_limits<double>::infinity();
  for (const double tol : {1e-2, 1e-4, 1e-6, 1e-8, 1e-10}) {
    const auto res = bisect(f, 0.0, 1.0, tol);
    const double width = res.hi - res.lo;
    EXPECT_LE(width, tol);
    EXPECT_LE(width, prev);
    prev = width;
  }
}

TEST(Bisect, DegreeEightRoot) {
  const auto res = bisect(critical_poly, 0.1, 0.2, 1e-14);
  EXPECT_TRUE(res.converged);
  EXPECT_NEAR(std::sqrt(res.root), 0.39466, 5e-5);
  EXPECT_LE(std::abs(res.residual), 1e-12);
}

TEST(Bisect, CaseBoundaryX) {
  const auto res = bisect([](double x) { return a_of_x(x) - 0.75; }, 0.0, constants::inv_sqrt3, 1e-15);
  EXPECT_NEAR(a_of_x(res.root), 0.75, 1e-13);
}

TEST(Bisect, ThrowsWithoutSignChange) {
  EXPECT_THROW(bisect([](double y) { return y * y + 1.0; }, -1.0, 1.0, 1e-8), NotBracketed);
  EXPECT_THROW(bisect([](double y) { return y; }, 1.0, 0.0, 1e-8), InvalidArgument);
}

TEST(Bisect, EndpointRoot) {
  const auto res = bisect([](double y) { return y; }, 0.0, 1.0, 1e-8);
  EXPECT_EQ(res.root, 0.0);
  EXPECT_TRUE(res.converged);
}

TEST(SignChanges, SingleRootOfQuadratic) {
  const auto br = sign_changes([](double y) { return y * y - 1.0; }, 0.0, 2.0, 100);
  ASSERT_EQ(br.size(), 1u);
  EXPECT_LE(br[0].lo, 1.0);
  EXPECT_GE(br[0].hi, 1.0);
}

TEST(SignChanges, DegreeEightPolynomialHasOneRoot) {
  EXPECT_EQ(sign_changes(critical_poly, 0.0, 0.5, 10000).size(), 1u);
}

TEST(SignChanges, LogarithmicCorrectionDerivative) {
  // dH_a/dw = c^2 w/(1-w) - w for a = 0.6 on (0, 4a^2/9)
  const double a = 0.6;
  const double c = 1.0 - 4.0 * a * a / 9.0;
  auto dH = [c](double w) { return c * c * w / (1.0 - w) - w; };
  EXPECT_LE(sign_changes(dH, 1e-9, 4.0 * a * a / 9.0, 1000).size(), 1u);
}

TEST(SignChanges, ExactGridZeroIsReported) {
  const auto br = sign_changes([](double y) { return y - 0.5; }, 0.0, 1.0, 3);
  ASSERT_EQ(br.size(), 1u);
  EXPECT_EQ(br[0].lo, 0.5);
}

TEST(GoldenMax, Parabola) {
  const auto [arg, val] = golden_max([](double a) { return -(a - 0.3) * (a - 0.3); }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(arg, 0.3, 1e-8);
  EXPECT_NEAR(val, 0.0, 1e-15);
}

TEST(GoldenMax, EndpointMaximum) {
  const auto [arg, val] = golden_max([](double a) { return a; }, 0.0, 1.0, 1e-10);
  EXPECT_EQ(arg, 1.0);
  EXPECT_EQ(val, 1.0);
}

// The displayed middle-case objective decreases on [3/5, 3/4], so its
// maximizer is the left end 3/5 (not 3/4); the maximum stays below 27R^4/8.
TEST(GoldenMax, MiddleCaseObjectiveAtSharpRadius) {
  const double R = constants::sharp_R;
  auto f = [R](double a) { return thm5::case2_objective(a, R); };
  const auto [arg, val] = golden_max(f, 0.6, 0.75, 1e-12);
  EXPECT_NEAR(arg, 0.6, 1e-6);
  EXPECT_LT(val, 27.0 / 8.0 * std::pow(R, 4));
  EXPECT_GT(f(0.6), f(0.75));
}

TEST(GoldenMax, UpperCaseObjectiveBelowBound) {
  const double R = constants::sharp_R;
  const auto [arg, val] = golden_max([R](double a) { return thm5::case3_objective(a, R); }, 0.75, 1.0, 1e-12);
  EXPECT_GE(arg, 0.75);
  EXPECT_LE(val, 27.0 / 8.0 * std::pow(R, 4));
}

TEST(GoldenMax, AgreesWithDenseGrid) {
  const double R = constants::sharp_R;
  const std::vector<std::function<double(double)>> objectives{
      [R](double a) { return thm5::case2_objective(a, R); },
      [R](double a) { return thm5::case3_objective(a, R); },
      [](double a) { return thm5::case3_objective(a, constants::inv_sqrt3); },
      [](double a) { return std::sin(3.0 * a) * (1.0 - a); }};
  const std::vector<std::pair<double, double>> spans{{0.6, 0.75}, {0.75, 1.0}, {0.0, 1.0}, {0.0, 1.0}};
  for (std::size_t i = 0; i < objectives.size(); ++i) {
    const auto [lo, hi] = spans[i];
    const std::size_t n = 10000;
    double best = lo, best_v = -1e300;
    for (std::size_t j = 0; j < n; ++j) {
      const double a = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(n - 1);
      if (objectives[i](a) > best_v) {
        best_v = objectives[i](a);
        best = a;
      }
    }
    const auto [arg, val] = golden_max(objectives[i], lo, hi, 1e-12);
    EXPECT_NEAR(arg, best, (hi - lo) / static_cast<double>(n - 1)) << "objective " << i;
    EXPECT_GE(val, best_v - 1e-15);
  }
}

TEST(Trapezoid, ExactForLinear) {
  for (const std::size_t M : {2u, 3u, 17u}) EXPECT_DOUBLE_EQ(trapezoid([](double) { return 1.0; }, 0.0, 1.0, M), 1.0);
  EXPECT_EQ(trapezoid([](double u) { return u; }, 0.0, 1.0, 2), 0.5);
  EXPECT_THROW(trapezoid([](double u) { return u; }, 0.0, 1.0, 1), InvalidArgument);
}

TEST(Trapezoid, AreaIdentityForBoundaryFamily) {
  const double x = 0.2, r = 0.3;
  const double a = a_of_x(x);
  auto g = [x, a](double u) { return u == 0.0 ? a * a : bound_thm1_B(x, std::sqrt(u)) / u; };
  EXPECT_NEAR(trapezoid(g, 0.0, r * r, 4096), bound_thm1_B2(x, r), 1e-8);
}

TEST(Trapezoid, RichardsonRate) {
  const double x = 0.3;
  const double r = r_admissible(x);
  const double a = a_of_x(x);
  auto g = [x, a](double u) { return u == 0.0 ? a * a : bound_thm1_B(x, std::sqrt(u)) / u; };
  const double exact = bound_thm1_B2(x, r);
  for (std::size_t M = 64; M <= 1024; M *= 2) {
    const double e1 = std::abs(trapezoid(g, 0.0, r * r, M) - exact);
    const double e2 = std::abs(trapezoid(g, 0.0, r * r, 2 * M) - exact);
    EXPECT_LT(e2, 0.3 * e1) << "M=" << M;
  }
}
