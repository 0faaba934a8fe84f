#pragma once

#include <array>
#include <optional>
#include <vector>

#include "thermoform/calculus.hpp"
#include "thermoform/eos.hpp"
#include "thermoform/paths.hpp"

namespace thermoform {

/// The Lagrangian 1-form L = L_V dV + L_S dS of the internal energy, with
///
///   L_V(S, V; S') = T S' - P,   S' = dS/dV along the path,
///   L_S(S, V; V') = T - P V',   V' = dV/dS along the path.
///
/// Along a monotone stretch of path each component alone reproduces
/// T dS - P dV, so summing both would count the energy change twice. The
/// action therefore uses one component per point (whichever coordinate
/// moves faster) and the pair is kept for the closure and Euler–Lagrange
/// diagnostics.
class LagrangianOneForm {
 public:
  explicit LagrangianOneForm(EosModel model) : model_(std::move(model)) {}

  const EosModel& model() const { return model_; }

  double component_v(double s, double v, double ds_dv) const {
    return model_.temperature(s, v) * ds_dv - model_.pressure(s, v);
  }
  double component_s(double s, double v, double dv_ds) const {
    return model_.temperature(s, v) - model_.pressure(s, v) * dv_ds;
  }

  /// L evaluated on the tangent (ds, dv) at (s, v), via one component.
  double on_tangent(double s, double v, double ds, double dv) const;

  /// The chart 1-form (T, -P) that both components reduce to.
  OneForm chart_form() const { return energy_form(model_); }

 private:
  EosModel model_;
};

/// U[S, V] = ∫_Γ L, evaluated through the Lagrangian components and
/// cross-checked against the line integral of dU (ConsistencyError if the
/// two disagree beyond quadrature precision).
double action(const EosModel& model, const Path& path, const Tolerances& tol = {});

/// (∂T/∂V)_S + (∂P/∂S)_V: the closure relation ∂L_V/∂S = ∂L_S/∂V after the
/// slope terms cancel. Zero exactly when the first Maxwell relation holds.
double closure_residual(const EosModel& model, const StatePoint& pt,
                        const Differentiator& engine = Differentiator{});

enum class EulerLagrangeEquation { v_parametrized, s_parametrized };

/// One Euler–Lagrange residual at parameter t:
///   v_parametrized: ∂L_V/∂S - d/dV[∂L_V/∂S'],  needs dV/dt != 0;
///   s_parametrized: ∂L_S/∂V - d/dS[∂L_S/∂V'],  needs dS/dt != 0.
/// Throws NonMonotoneError at a turning point of the parametrizing
/// coordinate.
double euler_lagrange_residual(const EosModel& model, const Path& path, double t,
                               EulerLagrangeEquation which,
                               const Differentiator& engine = Differentiator{});

/// Both residuals at t; the path must be monotone in S and V there.
std::array<double, 2> euler_lagrange_residuals(const EosModel& model, const Path& path, double t,
                                               const Differentiator& engine = Differentiator{});

struct EulerLagrangeSample {
  double t;
  std::optional<double> v_equation;
  std::optional<double> s_equation;
};

/// Residuals sampled inside every monotone piece of the path (the path is
/// split at turning points of S and V first).
std::vector<EulerLagrangeSample> euler_lagrange_profile(const EosModel& model, const Path& path,
                                                        int samples_per_piece = 8,
                                                        const Differentiator& engine = Differentiator{});

struct VariationalResult {
  int index = 0;
  double action_before = 0.0;
  double action_after = 0.0;
  double delta = 0.0;  // action_after - action_before
  double perturbation_amplitude = 0.0;
};

/// δU over a family of fixed-endpoint deformations of gamma. Fourier
/// families perturb gamma itself; other generators replace it by paths
/// between the same endpoints.
std::vector<VariationalResult> variational_check(const EosModel& model, const Path& gamma,
                                                 const PathFamily& family,
                                                 const Tolerances& tol = {});

/// The same sweep for an arbitrary 1-form (e.g. the inexact work form).
std::vector<VariationalResult> variational_check(const OneForm& form, const Path& gamma,
                                                 const PathFamily& family, const DomainBox& box,
                                                 const Tolerances& tol = {});

/// (T_claim - ∂U/∂S, P_claim + ∂U/∂V), with U differentiated by dual
/// numbers independently of the model's own T and P.
std::array<double, 2> equilibrium_surface_residual(const EosModel& model, const StatePoint& pt,
                                                   double t_claim, double p_claim);

}  // namespace thermoform
