#pragma once

#include <array>
#include <functional>
#include <string_view>
#include <utility>

#include "thermoform/core.hpp"
#include "thermoform/dual.hpp"
#include "thermoform/eos.hpp"

namespace thermoform {

enum class DerivativeMode { analytic, dual_number, central_difference };

std::string_view to_string(DerivativeMode m);
DerivativeMode derivative_mode_from_string(std::string_view name);

using Gradient = std::array<double, 2>;

/// A scalar function of the two coordinates of a chart. Always evaluable on
/// duals; optionally carries a hand-derived gradient.
class Field {
 public:
  using DualFn = std::function<Dual(Dual, Dual)>;
  using GradientFn = std::function<Gradient(double, double)>;

  Field() = default;
  explicit Field(DualFn f, GradientFn analytic_gradient = {})
      : f_(std::move(f)), grad_(std::move(analytic_gradient)) {}

  static Field constant(double c);
  /// q(S, V) of a model, on the SV chart.
  static Field of(const EosModel& model, Quantity q);

  double operator()(double c1, double c2) const { return f_(Dual(c1), Dual(c2)).v; }
  Dual operator()(Dual c1, Dual c2) const { return f_(c1, c2); }

  bool has_analytic_gradient() const { return static_cast<bool>(grad_); }
  Gradient analytic_gradient(double c1, double c2) const { return grad_(c1, c2); }

  friend Field operator-(const Field& f);
  friend Field operator*(double k, const Field& f);

 private:
  DualFn f_;
  GradientFn grad_;
};

/// comp1 d(c1) + comp2 d(c2) on a chart.
struct OneForm {
  Chart chart = Chart::SV;
  Field comp1;
  Field comp2;
};

/// coeff d(c1) ∧ d(c2) on a chart; d(c1) ∧ d(c2) = -d(c2) ∧ d(c1).
struct TwoForm {
  Chart chart = Chart::SV;
  std::function<double(double, double)> coeff;

  double operator()(double c1, double c2) const { return coeff(c1, c2); }
};

/// dU = T dS - P dV.
OneForm energy_form(const EosModel& model);
/// T dS, the reversible heat 1-form.
OneForm heat_form(const EosModel& model);
/// -P dV, the work 1-form.
OneForm work_form(const EosModel& model);

/// Derivative engine.
///
/// analytic uses hand-derived gradients where they exist and falls back to
/// duals otherwise; dual_number is exact to rounding; central_difference
/// uses the step h = cbrt(eps) * max(1, |x|).
class Differentiator {
 public:
  explicit Differentiator(DerivativeMode mode = DerivativeMode::analytic, Tolerances tol = {})
      : mode_(mode), tol_(tol) {}

  DerivativeMode mode() const { return mode_; }
  const Tolerances& tolerances() const { return tol_; }

  Gradient gradient(const Field& f, double c1, double c2) const;
  /// (∂q/∂S, ∂q/∂V) at (s, v).
  Gradient gradient(const EosModel& model, Quantity q, double s, double v) const;

  static double step(double x);

 private:
  DerivativeMode mode_;
  Tolerances tol_;
};

/// Partial derivative of `of` with respect to the chart coordinate `wrt`,
/// holding the other coordinate of `chart` fixed. `pt` may be given in any
/// chart; non-SV points are inverted first.
///
/// The analytic mode differentiates along the level set of the held
/// coordinate; dual_number and central_difference differentiate through
/// the Newton inversion of `chart`.
double partial(const EosModel& model, Quantity of, Quantity wrt, Chart chart, const StatePoint& pt,
               const Differentiator& engine = Differentiator{});

/// Partial derivative of a field along axis 0 or 1 of its own chart.
double partial(const Field& f, int axis, double c1, double c2,
               const Differentiator& engine = Differentiator{});

/// d of a 1-form: coeff = ∂comp2/∂c1 - ∂comp1/∂c2.
TwoForm exterior_derivative(const OneForm& form, const Differentiator& engine = Differentiator{});

/// Jacobian determinant ∂(A, B)/∂(X, Y) at an SV point, computed as the
/// ratio of the two determinants taken with respect to (S, V). Throws
/// SingularChartError when (X, Y) is not a valid chart at the point.
double wedge_ratio(const EosModel& model, std::pair<Quantity, Quantity> numerator,
                   std::pair<Quantity, Quantity> denominator, const StatePoint& pt,
                   const Differentiator& engine = Differentiator{});

}  // namespace thermoform
