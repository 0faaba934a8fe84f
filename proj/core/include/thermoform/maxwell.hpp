#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "thermoform/calculus.hpp"
#include "thermoform/eos.hpp"

namespace thermoform {

/// One of the four Maxwell relations, obtained by dividing
/// dT ∧ dS = dP ∧ dV by dX ∧ dY:
///   1) (X, Y) = (V, S):  (∂T/∂V)_S = -(∂P/∂S)_V
///   2) (X, Y) = (T, V):  (∂S/∂V)_T =  (∂P/∂T)_V
///   3) (X, Y) = (P, T): -(∂S/∂P)_T =  (∂V/∂T)_P
///   4) (X, Y) = (P, S):  (∂T/∂P)_S =  (∂V/∂S)_P
struct MaxwellCase {
  int index;
  std::pair<Quantity, Quantity> divisor;  // (X, Y)
  Chart held_chart;                       // chart of the held-constant partials
  std::string_view statement;

  static const MaxwellCase& get(int index);
  static const std::array<MaxwellCase, 4>& all();
};

/// ∂(T, S)/∂(X, Y) - ∂(P, V)/∂(X, Y) at an SV point.
double maxwell_residual_jacobian(const EosModel& model, const MaxwellCase& c, const StatePoint& pt,
                                 const Differentiator& engine = Differentiator{});

/// lhs - rhs of the case statement from held-constant partial derivatives.
double maxwell_residual_partials(const EosModel& model, const MaxwellCase& c, const StatePoint& pt,
                                 const Differentiator& engine = Differentiator{});

enum class PotentialKind { U, F, H, G };

std::string_view to_string(PotentialKind k);

/// A thermodynamic potential obtained from U(S, V) by Legendre transform:
/// F = U - TS on (T, V), H = U + PV on (S, P), G = U - TS + PV on (T, P).
class Potential {
 public:
  Potential(EosModel model, PotentialKind kind, Tolerances tol = {});

  PotentialKind kind() const { return kind_; }
  Chart natural_chart() const;
  /// Maxwell case generated by closure of the natural 1-form
  /// (U -> 1, F -> 2, G -> 3, H -> 4).
  int maxwell_case() const;

  /// Value at a point of the natural chart.
  double value(const StatePoint& natural) const;
  Dual value(Dual c1, Dual c2) const;
  /// The potential as a field over its natural chart.
  Field as_field() const;

  /// dU = T dS - P dV, dF = -S dT - P dV, dH = T dS + V dP, dG = -S dT + V dP.
  OneForm natural_form() const;

 private:
  EosModel model_;
  PotentialKind kind_;
  Tolerances tol_;
};

/// Builds the potential; throws if the box centre cannot be mapped to the
/// natural chart and back.
Potential legendre(const EosModel& model, PotentialKind kind, const Tolerances& tol = {});

/// Closure residual of the potential's natural 1-form, signed to match
/// maxwell_residual_partials for the case it generates. `pt` is an SV point.
double maxwell_from_potential(const EosModel& model, PotentialKind kind, const StatePoint& pt,
                              const Differentiator& engine = Differentiator{});

}  // namespace thermoform
