#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>

#include "thermoform/core.hpp"
#include "thermoform/dual.hpp"

namespace thermoform {

/// Axis-aligned box in the (S, V) chart that bounds every model evaluation
/// and every coordinate inversion.
struct DomainBox {
  double s_lo;
  double s_hi;
  double v_lo;
  double v_hi;

  static DomainBox make(double s_lo, double s_hi, double v_lo, double v_hi);

  bool contains(double s, double v) const {
    return s >= s_lo && s <= s_hi && v >= v_lo && v <= v_hi;
  }
};

/// Second partial derivatives of U(S, V), stored as first partials of T and P.
struct SecondPartials {
  double t_s;
  double t_v;
  double p_s;
  double p_v;
};

struct StateValues {
  double u;
  double t;
  double p;
};

namespace detail {

class EosImpl {
 public:
  virtual ~EosImpl() = default;
  virtual double energy(double s, double v) const = 0;
  virtual Dual energy(Dual s, Dual v) const = 0;
  virtual double temperature(double s, double v) const = 0;
  virtual Dual temperature(Dual s, Dual v) const = 0;
  virtual double pressure(double s, double v) const = 0;
  virtual Dual pressure(Dual s, Dual v) const = 0;
  virtual SecondPartials second_partials(double s, double v) const = 0;
};

}  // namespace detail

/// A fundamental relation U(S, V) together with T = ∂U/∂S and P = -∂U/∂V.
///
/// Models are cheap-to-copy immutable handles; evaluation is reentrant.
/// Member evaluators do not check the domain box, the free functions
/// evaluate() and invert_to_chart() do.
class EosModel {
 public:
  EosModel(std::string name, std::map<std::string, double> parameters, DomainBox domain,
           std::shared_ptr<const detail::EosImpl> impl, bool has_analytic_derivatives = true);

  const std::string& name() const { return name_; }
  const std::map<std::string, double>& parameters() const { return parameters_; }
  const DomainBox& domain() const { return domain_; }
  bool has_analytic_derivatives() const { return analytic_; }

  EosModel with_domain(const DomainBox& box) const;

  double energy(double s, double v) const { return impl_->energy(s, v); }
  Dual energy(Dual s, Dual v) const { return impl_->energy(s, v); }
  double temperature(double s, double v) const { return impl_->temperature(s, v); }
  Dual temperature(Dual s, Dual v) const { return impl_->temperature(s, v); }
  double pressure(double s, double v) const { return impl_->pressure(s, v); }
  Dual pressure(Dual s, Dual v) const { return impl_->pressure(s, v); }
  SecondPartials second_partials(double s, double v) const { return impl_->second_partials(s, v); }

  /// Value of any state quantity at (s, v); X is double or Dual.
  template <class X>
  X quantity(Quantity q, X s, X v) const {
    switch (q) {
      case Quantity::S: return s;
      case Quantity::V: return v;
      case Quantity::T: return temperature(s, v);
      case Quantity::P: return pressure(s, v);
      case Quantity::U: return energy(s, v);
    }
    return s;
  }

  /// Gradient (∂q/∂S, ∂q/∂V). Uses the analytic second partials when the
  /// model has them, otherwise forward-mode duals.
  std::array<double, 2> gradient(Quantity q, double s, double v) const;

 private:
  std::string name_;
  std::map<std::string, double> parameters_;
  DomainBox domain_;
  std::shared_ptr<const detail::EosImpl> impl_;
  bool analytic_;
};

/// Monatomic ideal gas, U = V^(-2/3) exp(2S/3), so T = 2U/3 and PV = T.
EosModel ideal_gas();
EosModel ideal_gas(const DomainBox& box);

/// Van der Waals fluid with T = (2/3)(V-b)^(-2/3) exp(2S/3), U = 3T/2 - a/V
/// and P = T/(V-b) - a/V^2. The box must lie in V > b and in the
/// single-phase region; both are checked on a sample grid.
EosModel van_der_waals(double a, double b);
EosModel van_der_waals(double a, double b, const DomainBox& box);

/// Negative control: the same U and T but with P replaced by P + S, which
/// breaks every Maxwell relation by a unit amount.
EosModel corrupted(const EosModel& base);

/// (U, T, P) at an SV point. Throws DomainError outside the box or where
/// T or P is not positive.
StateValues evaluate(const EosModel& model, const StatePoint& pt);

/// Image of an SV point in another chart.
StatePoint to_chart(const EosModel& model, const StatePoint& sv, Chart target);

/// The SV point at which the model takes the given chart coordinates.
/// Throws BracketError when the box holds no solution and ConvergenceError
/// when Newton iteration does not settle within max_newton_iter.
StatePoint invert_to_chart(const EosModel& model, const StatePoint& target,
                           const Tolerances& tol = {});

/// Dual-valued inversion: the value part is solved by Newton iteration and
/// the derivative part is propagated by implicit differentiation, so the
/// result carries d(S, V) along the seeded chart direction.
std::array<Dual, 2> invert_to_chart(const EosModel& model, Chart chart, Dual c1, Dual c2,
                                    const Tolerances& tol = {});

/// The volume at which the model has temperature `t` on the entropy line
/// `s`. T decreases monotonically in V for every built-in model; throws
/// BracketError when the box holds no such volume.
double volume_at(const EosModel& model, double s, double t, const Tolerances& tol = {});

}  // namespace thermoform
