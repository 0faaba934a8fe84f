#include "thermoform/calculus.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace thermoform {

namespace {

double det2(const Gradient& a, const Gradient& b) { return a[0] * b[1] - a[1] * b[0]; }

StatePoint as_sv(const EosModel& model, const StatePoint& pt, const Tolerances& tol) {
  return pt.chart() == Chart::SV ? pt : invert_to_chart(model, pt, tol);
}

}  // namespace

std::string_view to_string(DerivativeMode m) {
  switch (m) {
    case DerivativeMode::analytic: return "analytic";
    case DerivativeMode::dual_number: return "dual_number";
    case DerivativeMode::central_difference: return "central_difference";
  }
  return "?";
}

DerivativeMode derivative_mode_from_string(std::string_view name) {
  for (auto m : {DerivativeMode::analytic, DerivativeMode::dual_number,
                 DerivativeMode::central_difference}) {
    if (to_string(m) == name) return m;
  }
  throw DomainError("unknown derivative mode '" + std::string(name) + "'");
}

Field Field::constant(double c) {
  return Field([c](Dual, Dual) { return Dual(c); },
               [](double, double) { return Gradient{0.0, 0.0}; });
}

Field Field::of(const EosModel& model, Quantity q) {
  GradientFn grad;
  if (model.has_analytic_derivatives()) {
    grad = [model, q](double s, double v) { return model.gradient(q, s, v); };
  }
  return Field([model, q](Dual s, Dual v) { return model.quantity(q, s, v); }, std::move(grad));
}

Field operator-(const Field& f) { return -1.0 * f; }

Field operator*(double k, const Field& f) {
  Field::GradientFn grad;
  if (f.grad_) {
    grad = [k, g = f.grad_](double a, double b) {
      const Gradient x = g(a, b);
      return Gradient{k * x[0], k * x[1]};
    };
  }
  return Field([k, h = f.f_](Dual a, Dual b) { return Dual(k) * h(a, b); }, std::move(grad));
}

OneForm energy_form(const EosModel& model) {
  return {Chart::SV, Field::of(model, Quantity::T), -Field::of(model, Quantity::P)};
}

OneForm heat_form(const EosModel& model) {
  return {Chart::SV, Field::of(model, Quantity::T), Field::constant(0.0)};
}

OneForm work_form(const EosModel& model) {
  return {Chart::SV, Field::constant(0.0), -Field::of(model, Quantity::P)};
}

double Differentiator::step(double x) {
  static const double h0 = std::cbrt(std::numeric_limits<double>::epsilon());
  return h0 * std::max(1.0, std::abs(x));
}

Gradient Differentiator::gradient(const Field& f, double c1, double c2) const {
  switch (mode_) {
    case DerivativeMode::analytic:
      if (f.has_analytic_gradient()) return f.analytic_gradient(c1, c2);
      [[fallthrough]];
    case DerivativeMode::dual_number:
      return {f(Dual::variable(c1), Dual(c2)).d, f(Dual(c1), Dual::variable(c2)).d};
    case DerivativeMode::central_difference: {
      const double h1 = step(c1);
      const double h2 = step(c2);
      return {(f(c1 + h1, c2) - f(c1 - h1, c2)) / (2.0 * h1),
              (f(c1, c2 + h2) - f(c1, c2 - h2)) / (2.0 * h2)};
    }
  }
  return {0.0, 0.0};
}

Gradient Differentiator::gradient(const EosModel& model, Quantity q, double s, double v) const {
  switch (mode_) {
    case DerivativeMode::analytic:
      if (model.has_analytic_derivatives()) return model.gradient(q, s, v);
      [[fallthrough]];
    case DerivativeMode::dual_number:
      return {model.quantity(q, Dual::variable(s), Dual(v)).d,
              model.quantity(q, Dual(s), Dual::variable(v)).d};
    case DerivativeMode::central_difference: {
      const double hs = step(s);
      const double hv = step(v);
      return {(model.quantity(q, s + hs, v) - model.quantity(q, s - hs, v)) / (2.0 * hs),
              (model.quantity(q, s, v + hv) - model.quantity(q, s, v - hv)) / (2.0 * hv)};
    }
  }
  return {0.0, 0.0};
}

double partial(const EosModel& model, Quantity of, Quantity wrt, Chart chart, const StatePoint& pt,
               const Differentiator& engine) {
  const int axis = axis_index(chart, wrt);
  const StatePoint sv = as_sv(model, pt, engine.tolerances());
  const double s = sv.c1();
  const double v = sv.c2();

  if (chart == Chart::SV) return engine.gradient(model, of, s, v)[axis];

  auto [q1, q2] = axes(chart);
  const Quantity held = axis == 0 ? q2 : q1;

  switch (engine.mode()) {
    case DerivativeMode::analytic: {
      const Gradient gq = engine.gradient(model, of, s, v);
      const Gradient gw = engine.gradient(model, wrt, s, v);
      const Gradient gh = engine.gradient(model, held, s, v);
      // Tangent to the level set of the held coordinate.
      const Gradient dir{-gh[1], gh[0]};
      const double rate = gw[0] * dir[0] + gw[1] * dir[1];
      const double scale = std::hypot(gw[0], gw[1]) * std::hypot(dir[0], dir[1]);
      if (!(std::abs(rate) > 1e-14 * scale)) {
        throw SingularChartError("held-constant partial is singular at this point");
      }
      return (gq[0] * dir[0] + gq[1] * dir[1]) / rate;
    }
    case DerivativeMode::dual_number: {
      Dual c1(model.quantity(q1, s, v));
      Dual c2(model.quantity(q2, s, v));
      (axis == 0 ? c1 : c2).d = 1.0;
      const auto x = invert_to_chart(model, chart, c1, c2, engine.tolerances());
      return model.quantity(of, x[0], x[1]).d;
    }
    case DerivativeMode::central_difference: {
      double c[2] = {model.quantity(q1, s, v), model.quantity(q2, s, v)};
      const double h = Differentiator::step(c[axis]);
      auto eval = [&](double shift) {
        double cc[2] = {c[0], c[1]};
        cc[axis] += shift;
        const StatePoint x =
            invert_to_chart(model, StatePoint::make(chart, cc[0], cc[1]), engine.tolerances());
        return model.quantity(of, x.c1(), x.c2());
      };
      return (eval(h) - eval(-h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double partial(const Field& f, int axis, double c1, double c2, const Differentiator& engine) {
  if (axis != 0 && axis != 1) throw DomainError("axis must be 0 or 1");
  return engine.gradient(f, c1, c2)[axis];
}

TwoForm exterior_derivative(const OneForm& form, const Differentiator& engine) {
  return {form.chart, [form, engine](double c1, double c2) {
            return engine.gradient(form.comp2, c1, c2)[0] - engine.gradient(form.comp1, c1, c2)[1];
          }};
}

double wedge_ratio(const EosModel& model, std::pair<Quantity, Quantity> numerator,
                   std::pair<Quantity, Quantity> denominator, const StatePoint& pt,
                   const Differentiator& engine) {
  const StatePoint sv = as_sv(model, pt, engine.tolerances());
  auto grad = [&](Quantity q) { return engine.gradient(model, q, sv.c1(), sv.c2()); };
  const Gradient gx = grad(denominator.first);
  const Gradient gy = grad(denominator.second);
  const double den = det2(gx, gy);
  const double scale = std::hypot(gx[0], gx[1]) * std::hypot(gy[0], gy[1]);
  if (!(std::abs(den) > 1e-14 * scale)) {
    throw SingularChartError("coordinate change to (" + std::string(to_string(denominator.first)) +
                             ", " + std::string(to_string(denominator.second)) +
                             ") is singular at this point");
  }
  return det2(grad(numerator.first), grad(numerator.second)) / den;
}

}  // namespace thermoform
