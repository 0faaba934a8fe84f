#include "thermoform/lagrangian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "thermoform/quadrature.hpp"

namespace thermoform {

namespace {

bool stalled(double rate, double other) {
  return !(std::abs(rate) > 1e-12 * (std::abs(rate) + std::abs(other)));
}

std::vector<Path> deformations(const Path& gamma, const PathFamily& family, const DomainBox& box) {
  if (family.generator != PathGenerator::fourier_perturbed) {
    return generate_paths(family, gamma.start(), gamma.end(), box);
  }
  constexpr int kMaxAttempts = 100;
  std::vector<Path> out;
  for (int i = 0; i < family.count; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
      auto coeffs = fourier_coefficients(family.seed, i, family.amplitude, attempt);
      Path p = gamma.perturbed(coeffs[0], coeffs[1]);
      if (p.within(box)) {
        out.push_back(std::move(p));
        placed = true;
      }
    }
    if (!placed) throw DomainError("perturbed path cannot be kept inside the domain box");
  }
  return out;
}

std::vector<VariationalResult> sweep(const std::function<double(const Path&)>& functional,
                                     const Path& gamma, const PathFamily& family,
                                     const DomainBox& box) {
  const double before = functional(gamma);
  std::vector<VariationalResult> out;
  int index = 0;
  for (const Path& p : deformations(gamma, family, box)) {
    VariationalResult r;
    r.index = index++;
    r.action_before = before;
    r.action_after = functional(p);
    r.delta = r.action_after - r.action_before;
    r.perturbation_amplitude = family.amplitude;
    out.push_back(r);
  }
  return out;
}

}  // namespace

double LagrangianOneForm::on_tangent(double s, double v, double ds, double dv) const {
  if (ds == 0.0 && dv == 0.0) return 0.0;
  if (std::abs(dv) >= std::abs(ds)) return component_v(s, v, ds / dv) * dv;
  return component_s(s, v, dv / ds) * ds;
}

double action(const EosModel& model, const Path& path, const Tolerances& tol) {
  if (!path.within(model.domain())) throw DomainError("path leaves the model domain");
  const LagrangianOneForm lagrangian(model);
  const double via_components =
      integrate([&](double t) { return lagrangian.on_tangent(path.s(t), path.v(t), path.ds(t), path.dv(t)); },
                0.0, 1.0, path.breaks(), tol.quad_abs())
          .value;
  const double via_form = line_integral(energy_form(model), path, tol);
  if (std::abs(via_components - via_form) > 10.0 * tol.quad_abs() + 1e-10 * std::abs(via_form)) {
    std::ostringstream msg;
    msg << "action via Lagrangian components (" << via_components
        << ") disagrees with the dU line integral (" << via_form << ")";
    throw ConsistencyError(msg.str());
  }
  return via_components;
}

double closure_residual(const EosModel& model, const StatePoint& pt, const Differentiator& engine) {
  if (pt.chart() != Chart::SV) throw DomainError("closure_residual expects an SV point");
  const Gradient gt = engine.gradient(model, Quantity::T, pt.c1(), pt.c2());
  const Gradient gp = engine.gradient(model, Quantity::P, pt.c1(), pt.c2());
  return gt[1] + gp[0];
}

double euler_lagrange_residual(const EosModel& model, const Path& path, double t,
                               EulerLagrangeEquation which, const Differentiator& engine) {
  const double s = path.s(t);
  const double v = path.v(t);
  const double ds = path.ds(t);
  const double dv = path.dv(t);
  const Gradient gt = engine.gradient(model, Quantity::T, s, v);
  const Gradient gp = engine.gradient(model, Quantity::P, s, v);

  if (which == EulerLagrangeEquation::v_parametrized) {
    if (stalled(dv, ds)) throw NonMonotoneError("dV/dt vanishes; V cannot parametrize the path here");
    const double slope = ds / dv;
    // ∂L_V/∂S at fixed V and slope.
    const double dl_ds = gt[0] * slope - gp[0];
    // ∂L_V/∂S' = T, differentiated along the path with respect to V.
    const double dt_dv_along = (gt[0] * ds + gt[1] * dv) / dv;
    return dl_ds - dt_dv_along;
  }
  if (stalled(ds, dv)) throw NonMonotoneError("dS/dt vanishes; S cannot parametrize the path here");
  const double slope = dv / ds;
  const double dl_dv = gt[1] - gp[1] * slope;
  // ∂L_S/∂V' = -P, differentiated along the path with respect to S.
  const double dminus_p_ds_along = -(gp[0] * ds + gp[1] * dv) / ds;
  return dl_dv - dminus_p_ds_along;
}

std::array<double, 2> euler_lagrange_residuals(const EosModel& model, const Path& path, double t,
                                               const Differentiator& engine) {
  return {euler_lagrange_residual(model, path, t, EulerLagrangeEquation::v_parametrized, engine),
          euler_lagrange_residual(model, path, t, EulerLagrangeEquation::s_parametrized, engine)};
}

std::vector<EulerLagrangeSample> euler_lagrange_profile(const EosModel& model, const Path& path,
                                                        int samples_per_piece,
                                                        const Differentiator& engine) {
  std::vector<double> cuts{0.0};
  for (int axis : {0, 1}) {
    for (double t : turning_points(path, axis)) cuts.push_back(t);
  }
  for (double b : path.breaks()) cuts.push_back(b);
  cuts.push_back(1.0);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<EulerLagrangeSample> out;
  for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
    for (int i = 1; i <= samples_per_piece; ++i) {
      const double t = std::lerp(cuts[p], cuts[p + 1], static_cast<double>(i) / (samples_per_piece + 1));
      EulerLagrangeSample sample{t, std::nullopt, std::nullopt};
      try {
        sample.v_equation = euler_lagrange_residual(model, path, t, EulerLagrangeEquation::v_parametrized, engine);
      } catch (const NonMonotoneError&) {
      }
      try {
        sample.s_equation = euler_lagrange_residual(model, path, t, EulerLagrangeEquation::s_parametrized, engine);
      } catch (const NonMonotoneError&) {
      }
      out.push_back(sample);
    }
  }
  return out;
}

std::vector<VariationalResult> variational_check(const EosModel& model, const Path& gamma,
                                                 const PathFamily& family, const Tolerances& tol) {
  return sweep([&](const Path& p) { return action(model, p, tol); }, gamma, family, model.domain());
}

std::vector<VariationalResult> variational_check(const OneForm& form, const Path& gamma,
                                                 const PathFamily& family, const DomainBox& box,
                                                 const Tolerances& tol) {
  return sweep([&](const Path& p) { return line_integral(form, p, box, tol); }, gamma, family, box);
}

std::array<double, 2> equilibrium_surface_residual(const EosModel& model, const StatePoint& pt,
                                                   double t_claim, double p_claim) {
  if (pt.chart() != Chart::SV) throw DomainError("equilibrium_surface_residual expects an SV point");
  if (!model.domain().contains(pt.c1(), pt.c2())) throw DomainError("point outside the model domain");
  const double du_ds = model.energy(Dual::variable(pt.c1()), Dual(pt.c2())).d;
  const double du_dv = model.energy(Dual(pt.c1()), Dual::variable(pt.c2())).d;
  return {t_claim - du_ds, p_claim + du_dv};
}

}  // namespace thermoform
