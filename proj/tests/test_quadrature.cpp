#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "thermoform/core.hpp"
#include "thermoform/quadrature.hpp"

namespace thermoform {
namespace {

TEST(Quadrature, PolynomialsExact) {
  const auto r = integrate([](double x) { return 5 * x * x * x * x - 3 * x + 2; }, -1.0, 2.0, 1e-12);
  EXPECT_NEAR(r.value, 33.0 - 4.5 + 6.0, 1e-12);
  EXPECT_EQ(r.intervals, 1);
}

TEST(Quadrature, ReachesAbsoluteTarget) {
  const auto r = integrate([](double x) { return std::exp(x) * std::sin(7 * x); }, 0.0, 3.0, 1e-12);
  const double exact = (std::exp(3.0) * (std::sin(21.0) - 7 * std::cos(21.0)) + 7.0) / 50.0;
  EXPECT_NEAR(r.value, exact, 1e-12);
  EXPECT_LE(r.error, 1e-12);
}

TEST(Quadrature, KinkOnBreakIsResolvedInOneStep) {
  auto f = [](double x) { return std::abs(x - 0.3); };
  const std::vector<double> breaks{0.3};
  const auto r = integrate(f, 0.0, 1.0, breaks, 1e-13);
  EXPECT_NEAR(r.value, 0.5 * 0.09 + 0.5 * 0.49, 1e-14);
  EXPECT_EQ(r.intervals, 2);
}

TEST(Quadrature, ZeroAndEmptyIntervals) {
  EXPECT_EQ(integrate([](double) { return 0.0; }, 0.0, 1.0, 1e-10).value, 0.0);
  EXPECT_EQ(integrate([](double x) { return x; }, 2.0, 2.0, 1e-10).value, 0.0);
}

TEST(Quadrature, ReversedLimitsNegate) {
  auto f = [](double x) { return std::cos(x); };
  EXPECT_NEAR(integrate(f, 1.0, 0.0, 1e-12).value, -std::sin(1.0), 1e-13);
}

TEST(Quadrature, NonConvergenceThrows) {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  EXPECT_THROW(integrate(f, 1e-300, 1.0, 1e-14, 8), QuadratureError);
  EXPECT_THROW(integrate([](double) { return std::nan(""); }, 0.0, 1.0, 1e-10), QuadratureError);
}

}  // namespace
}  // namespace thermoform
