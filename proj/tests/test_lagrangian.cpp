#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "thermoform/lagrangian.hpp"

namespace thermoform {
namespace {

using testing::Gen;

constexpr double kDeltaU = 0.226995558960795598547517555953;
constexpr double kTwoPathWork = 0.027695787294931884;

const StatePoint kA = StatePoint::sv(0, 1);
const StatePoint kB = StatePoint::sv(1, 2);

TEST(Lagrangian, ComponentsReduceToEnergyForm) {
  const EosModel m = ideal_gas();
  const LagrangianOneForm l(m);
  Gen gen(41);
  for (int i = 0; i < 20; ++i) {
    const double s = gen.uniform(-1, 1), v = gen.uniform(0.5, 3);
    const double ds = gen.uniform(-1, 1), dv = gen.uniform(-1, 1);
    const double expected = m.temperature(s, v) * ds - m.pressure(s, v) * dv;
    EXPECT_NEAR(l.on_tangent(s, v, ds, dv), expected, 1e-13);
    EXPECT_NEAR(l.component_v(s, v, ds / dv) * dv, expected, 1e-12);
    EXPECT_NEAR(l.component_s(s, v, dv / ds) * ds, expected, 1e-12);
  }
  EXPECT_EQ(l.on_tangent(0, 1, 0, 0), 0.0);
}

TEST(Action, EqualsEnergyDifference) {
  const EosModel m = ideal_gas();
  EXPECT_NEAR(action(m, Path::segment(kA, kB)), kDeltaU, 1e-10);
  const Path wiggly = Path::segment(kA, kB).perturbed({0.2, -0.1, 0.05}, {-0.3, 0.1});
  EXPECT_NEAR(action(m, wiggly), kDeltaU, 1e-10);
  EXPECT_NEAR(action(m, Path::constant(kA)), 0.0, 1e-15);
}

TEST(Action, PathOutsideDomainRejected) {
  const EosModel m = ideal_gas(DomainBox::make(-1, 1, 0.5, 1.5));
  EXPECT_THROW(action(m, Path::segment(kA, kB)), DomainError);
}

TEST(Closure, VanishesForConsistentModels) {
  Gen gen(42);
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    for (auto mode : {DerivativeMode::analytic, DerivativeMode::dual_number}) {
      for (int i = 0; i < 30; ++i) {
        const StatePoint p = gen.sv_in(0, 1, 1, 3);
        const double scale = std::abs(m.second_partials(p.c1(), p.c2()).t_v);
        EXPECT_LE(std::abs(closure_residual(m, p, Differentiator(mode))), 1e-10 * scale);
      }
    }
  }
}

TEST(Closure, DetectsCorruptedPressure) {
  const EosModel m = corrupted(ideal_gas());
  Gen gen(43);
  for (int i = 0; i < 20; ++i) {
    EXPECT_NEAR(closure_residual(m, gen.sv_in(0, 1, 1, 3)), 1.0, 1e-10);
  }
  EXPECT_THROW(closure_residual(ideal_gas(), StatePoint::make(Chart::TV, 1, 1)), DomainError);
}

TEST(EulerLagrange, ResidualsAreMinusAndPlusClosure) {
  const Path p = Path::segment(kA, kB).perturbed({0.05}, {0.1});
  for (const EosModel& m : {ideal_gas(), corrupted(ideal_gas()), van_der_waals(0.1, 0.05)}) {
    for (double t : {0.2, 0.5, 0.8}) {
      const auto [s, v] = p(t);
      const double c = closure_residual(m, StatePoint::sv(s, v));
      const auto r = euler_lagrange_residuals(m, p, t);
      EXPECT_NEAR(r[0], -c, 1e-9);
      EXPECT_NEAR(r[1], c, 1e-9);
    }
  }
}

TEST(EulerLagrange, TurningPointOfParametrizingCoordinate) {
  const EosModel m = ideal_gas();
  const Path flat_v = Path::segment(kA, StatePoint::sv(1, 1));
  EXPECT_THROW(euler_lagrange_residual(m, flat_v, 0.5, EulerLagrangeEquation::v_parametrized), NonMonotoneError);
  EXPECT_NO_THROW(euler_lagrange_residual(m, flat_v, 0.5, EulerLagrangeEquation::s_parametrized));
}

TEST(EulerLagrange, ProfileSplitsAtTurningPoints) {
  const EosModel m = ideal_gas();
  const Path bump = Path::segment(kA, StatePoint::sv(1, 1)).perturbed({}, {0.4});
  const auto profile = euler_lagrange_profile(m, bump, 4);
  ASSERT_EQ(profile.size(), 8u);  // two monotone pieces
  for (const auto& sample : profile) {
    ASSERT_TRUE(sample.v_equation.has_value());
    ASSERT_TRUE(sample.s_equation.has_value());
    EXPECT_NEAR(*sample.v_equation, 0.0, 1e-10);
    EXPECT_NEAR(*sample.s_equation, 0.0, 1e-10);
  }
}

TEST(Variational, ActionIsStationaryForEveryFamily) {
  const EosModel m = ideal_gas();
  const Path gamma = Path::segment(kA, kB);
  for (auto g : {PathGenerator::straight_line, PathGenerator::monotone_spline, PathGenerator::fourier_perturbed}) {
    const auto results = variational_check(m, gamma, {g, 11, 10, 0.1});
    ASSERT_EQ(results.size(), 10u);
    for (const auto& r : results) EXPECT_LE(std::abs(r.delta), 1e-9);
  }
}

TEST(Variational, WorkIsPathDependent) {
  const EosModel m = ideal_gas();
  const Path gamma = Path::segment(kA, kB);
  // Two-path oracle: a single sin(pi t) bump of size 0.1 along the normal.
  const double c = 0.1 / std::numbers::sqrt2;
  const Path bent = gamma.perturbed({-c}, {c});
  const double dw = line_integral(work_form(m), bent) - line_integral(work_form(m), gamma);
  EXPECT_NEAR(std::abs(dw), kTwoPathWork, 1e-9);

  const auto sweep = variational_check(work_form(m), gamma, {PathGenerator::fourier_perturbed, 5, 20, 0.1},
                                       m.domain());
  double largest = 0.0;
  for (const auto& r : sweep) largest = std::max(largest, std::abs(r.delta));
  EXPECT_GT(largest, 1e-3);
}

TEST(Variational, CorruptedModelDeltaTracksEnclosedArea) {
  // With P -> P + S the integrand T dS - P dV picks up -S dV, so the action
  // changes by the signed area between the two paths.
  const EosModel m = corrupted(ideal_gas());
  const Path gamma = Path::segment(kA, kB);
  const auto results = variational_check(m, gamma, {PathGenerator::fourier_perturbed, 9, 10, 0.1});
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto coeffs = fourier_coefficients(9, static_cast<int>(i), 0.1);
    const Path bent = gamma.perturbed(coeffs[0], coeffs[1]);
    const double area = enclosed_area(Path::concat({bent, gamma.reversed()}));
    if (std::abs(area) < 1e-6) continue;
    EXPECT_NEAR(std::abs(results[i].delta) / std::abs(area), 1.0, 1e-8);
  }
}

TEST(EquilibriumSurface, ModelOwnTemperatureAndPressure) {
  Gen gen(44);
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    for (int i = 0; i < 20; ++i) {
      const StatePoint p = gen.sv_in(0, 1, 1, 3);
      const auto r = equilibrium_surface_residual(m, p, m.temperature(p.c1(), p.c2()), m.pressure(p.c1(), p.c2()));
      EXPECT_NEAR(r[0], 0.0, 1e-13);
      EXPECT_NEAR(r[1], 0.0, 1e-13);
    }
  }
  const EosModel bad = corrupted(ideal_gas());
  const auto r = equilibrium_surface_residual(bad, StatePoint::sv(0.5, 1), bad.temperature(0.5, 1),
                                              bad.pressure(0.5, 1));
  EXPECT_NEAR(r[1], 0.5, 1e-13);
  EXPECT_THROW(equilibrium_surface_residual(ideal_gas(), StatePoint::sv(9, 1), 1, 1), DomainError);
}

}  // namespace
}  // namespace thermoform
