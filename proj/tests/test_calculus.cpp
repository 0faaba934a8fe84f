#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <vector>

#include "support.hpp"
#include "thermoform/calculus.hpp"

namespace thermoform {
namespace {

using testing::Gen;
using Q = Quantity;

TEST(Dual, ArithmeticCarriesDerivative) {
  const Dual x = Dual::variable(3.0);
  const Dual y = x * x * x - 2.0 * x + 1.0;
  EXPECT_DOUBLE_EQ(y.v, 22.0);
  EXPECT_DOUBLE_EQ(y.d, 25.0);  // 3x^2 - 2
  const Dual q = 1.0 / x;
  EXPECT_DOUBLE_EQ(q.d, -1.0 / 9.0);
  EXPECT_NEAR(pow(x, 2.5).d, 2.5 * std::pow(3.0, 1.5), 1e-13);
  EXPECT_NEAR(exp(log(x)).d, 1.0, 1e-15);
  EXPECT_NEAR(sin(x).d, std::cos(3.0), 1e-15);
  EXPECT_NEAR(sqrt(x).d, 0.5 / std::sqrt(3.0), 1e-15);
}

TEST(Partial, TemperatureAlongVolumeAtConstantEntropy) {
  // T = (2/3) V^(-2/3) e^(2S/3)  =>  (∂T/∂V)_S = -(4/9) at (0, 1).
  for (auto mode : {DerivativeMode::analytic, DerivativeMode::dual_number}) {
    EXPECT_NEAR(partial(ideal_gas(), Q::T, Q::V, Chart::SV, StatePoint::sv(0, 1), Differentiator(mode)),
                -4.0 / 9.0, 1e-14);
  }
}

TEST(Partial, EntropyAlongVolumeAtConstantTemperature) {
  // S = (3/2) ln(3T/2) + ln V  =>  (∂S/∂V)_T = 1/V.
  for (auto mode : {DerivativeMode::analytic, DerivativeMode::dual_number}) {
    EXPECT_NEAR(partial(ideal_gas(), Q::S, Q::V, Chart::TV, StatePoint::sv(0.3, 2.0), Differentiator(mode)),
                0.5, 1e-12);
  }
  EXPECT_NEAR(partial(ideal_gas(), Q::S, Q::V, Chart::TV, StatePoint::sv(0.3, 2.0),
                      Differentiator(DerivativeMode::central_difference)),
              0.5, 1e-5);
}

TEST(Partial, AcceptsPointsInOtherCharts) {
  const EosModel m = ideal_gas();
  const StatePoint tv = StatePoint::make(Chart::TV, 2.0 / 3.0, 2.0);
  EXPECT_NEAR(partial(m, Q::S, Q::V, Chart::TV, tv), 0.5, 1e-12);
}

TEST(Partial, ConstantHasZeroDerivative) {
  const Field c = Field::constant(4.2);
  for (auto mode : {DerivativeMode::analytic, DerivativeMode::dual_number, DerivativeMode::central_difference}) {
    EXPECT_EQ(partial(c, 0, 0.3, 1.2, Differentiator(mode)), 0.0);
    EXPECT_EQ(partial(c, 1, 0.3, 1.2, Differentiator(mode)), 0.0);
  }
  // A chart coordinate held constant does not move.
  EXPECT_NEAR(partial(ideal_gas(), Q::T, Q::V, Chart::TV, StatePoint::sv(0.2, 1.3)), 0.0, 1e-15);
}

TEST(Partial, WrongAxisRejected) {
  EXPECT_THROW(partial(ideal_gas(), Q::T, Q::P, Chart::SV, StatePoint::sv(0, 1)), DomainError);
  EXPECT_THROW(partial(Field::constant(1.0), 2, 0.0, 1.0), DomainError);
}

TEST(ExteriorDerivative, EnergyFormIsClosed) {
  Gen gen(21);
  const EosModel m = ideal_gas();
  const TwoForm d = exterior_derivative(energy_form(m));
  for (int i = 0; i < 50; ++i) {
    const StatePoint p = gen.sv_in(-1, 2, 0.5, 4);
    EXPECT_LE(std::abs(d(p.c1(), p.c2())), 1e-8 * m.temperature(p.c1(), p.c2()));
  }
}

TEST(ExteriorDerivative, HeatAndWorkForms) {
  const EosModel m = ideal_gas();
  EXPECT_NEAR(exterior_derivative(heat_form(m))(0.0, 1.0), 4.0 / 9.0, 1e-14);
  EXPECT_NEAR(exterior_derivative(work_form(m))(0.0, 1.0), -4.0 / 9.0, 1e-14);
}

// Random cubic potential phi(x, y) with hand-coded gradient; its
// differential must be closed.
struct Cubic {
  std::array<double, 10> a;  // 1, x, y, x2, xy, y2, x3, x2y, xy2, y3

  double dx(double x, double y) const {
    return a[1] + 2 * a[3] * x + a[4] * y + 3 * a[6] * x * x + 2 * a[7] * x * y + a[8] * y * y;
  }
  double dy(double x, double y) const {
    return a[2] + a[4] * x + 2 * a[5] * y + a[7] * x * x + 2 * a[8] * x * y + 3 * a[9] * y * y;
  }
  Dual dx(Dual x, Dual y) const {
    return Dual(a[1]) + 2 * a[3] * x + a[4] * y + 3 * a[6] * x * x + 2 * a[7] * x * y + a[8] * y * y;
  }
  Dual dy(Dual x, Dual y) const {
    return Dual(a[2]) + a[4] * x + 2 * a[5] * y + a[7] * x * x + 2 * a[8] * x * y + 3 * a[9] * y * y;
  }
};

TEST(ExteriorDerivative, DOfDIsZeroForRandomPotentials) {
  Gen gen(22);
  for (int trial = 0; trial < 20; ++trial) {
    Cubic phi;
    for (double& c : phi.a) c = gen.uniform(-2, 2);
    const OneForm dphi{Chart::SV, Field([phi](Dual x, Dual y) { return phi.dx(x, y); }),
                       Field([phi](Dual x, Dual y) { return phi.dy(x, y); })};
    for (auto mode : {DerivativeMode::dual_number, DerivativeMode::central_difference}) {
      const TwoForm dd = exterior_derivative(dphi, Differentiator(mode));
      const double x = gen.uniform(-1, 1), y = gen.uniform(-1, 1);
      const double tol = mode == DerivativeMode::dual_number ? 1e-12 : 1e-6;
      EXPECT_NEAR(dd(x, y), 0.0, tol);
    }
  }
}

TEST(WedgeRatio, IdentityAndAntisymmetry) {
  const EosModel m = ideal_gas();
  Gen gen(23);
  for (int i = 0; i < 20; ++i) {
    const StatePoint p = gen.sv_in(-1, 2, 0.5, 4);
    EXPECT_NEAR(wedge_ratio(m, {Q::T, Q::S}, {Q::T, Q::S}, p), 1.0, 1e-14);
    EXPECT_NEAR(wedge_ratio(m, {Q::T, Q::S}, {Q::S, Q::T}, p), -1.0, 1e-14);
  }
}

TEST(WedgeRatio, CaseOneJacobiansAtReferencePoint) {
  const EosModel m = ideal_gas();
  const StatePoint p = StatePoint::sv(0, 1);
  EXPECT_NEAR(wedge_ratio(m, {Q::T, Q::S}, {Q::V, Q::S}, p), -4.0 / 9.0, 1e-14);
  EXPECT_NEAR(wedge_ratio(m, {Q::P, Q::V}, {Q::V, Q::S}, p), -4.0 / 9.0, 1e-14);
}

TEST(WedgeRatio, SingularDivisorRejected) {
  EXPECT_THROW(wedge_ratio(ideal_gas(), {Q::T, Q::S}, {Q::S, Q::S}, StatePoint::sv(0, 1)),
               SingularChartError);
  // On the ideal gas T and U are proportional, so (T, U) is not a chart.
  EXPECT_THROW(wedge_ratio(ideal_gas(), {Q::T, Q::S}, {Q::T, Q::U}, StatePoint::sv(0.2, 1.4)),
               SingularChartError);
}

TEST(WedgeRatio, ChainRuleInverts) {
  const std::vector<std::pair<Q, Q>> pairs{{Q::S, Q::V}, {Q::T, Q::V}, {Q::T, Q::P}, {Q::S, Q::P},
                                           {Q::P, Q::V}, {Q::T, Q::S}};
  Gen gen(24);
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    for (int i = 0; i < 50; ++i) {
      const StatePoint p = gen.sv_in(0, 1, 1, 2);
      const auto ab = pairs[gen.integer(0, 5)];
      const auto xy = pairs[gen.integer(0, 5)];
      const double forward = wedge_ratio(m, ab, xy, p);
      const double backward = wedge_ratio(m, xy, ab, p);
      EXPECT_NEAR(forward * backward, 1.0, 1e-12);
    }
  }
}

TEST(Differentiator, ModesAgree) {
  Gen gen(25);
  const Differentiator analytic(DerivativeMode::analytic);
  const Differentiator dual(DerivativeMode::dual_number);
  const Differentiator fd(DerivativeMode::central_difference);
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    for (int i = 0; i < 50; ++i) {
      const StatePoint p = gen.sv_in(0, 1, 1, 2);
      for (Q q : {Q::T, Q::P, Q::U}) {
        const Gradient a = analytic.gradient(m, q, p.c1(), p.c2());
        const Gradient d = dual.gradient(m, q, p.c1(), p.c2());
        const Gradient f = fd.gradient(m, q, p.c1(), p.c2());
        for (int k = 0; k < 2; ++k) {
          EXPECT_LE(std::abs(a[k] - d[k]), 1e-12 * std::abs(a[k]));
          EXPECT_LE(std::abs(f[k] - d[k]), 1e-5 * std::abs(d[k]));
        }
      }
      for (Chart c : {Chart::TV, Chart::TP, Chart::SP}) {
        auto [c1, c2] = axes(c);
        for (Q of : {Q::S, Q::V, Q::T, Q::P}) {
          for (Q wrt : {c1, c2}) {
            const double a = partial(m, of, wrt, c, p, analytic);
            const double d = partial(m, of, wrt, c, p, dual);
            const double f = partial(m, of, wrt, c, p, fd);
            EXPECT_LE(std::abs(a - d), 1e-12 * std::max(1.0, std::abs(a)));
            EXPECT_LE(std::abs(f - d), 1e-5 * std::max(1.0, std::abs(d)));
          }
        }
      }
    }
  }
}

TEST(Differentiator, StepPolicy) {
  const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  EXPECT_DOUBLE_EQ(Differentiator::step(0.5), h0);
  EXPECT_DOUBLE_EQ(Differentiator::step(-4.0), 4.0 * h0);
}

TEST(Differentiator, ModeNames) {
  for (auto m : {DerivativeMode::analytic, DerivativeMode::dual_number, DerivativeMode::central_difference}) {
    EXPECT_EQ(derivative_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(derivative_mode_from_string("symbolic"), DomainError);
}

}  // namespace
}  // namespace thermoform
