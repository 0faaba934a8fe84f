#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace thermoform {

// Error hierarchy. Every failure mode the library reports derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Target values are not reachable inside the model's domain box.
class BracketError : public Error {
 public:
  using Error::Error;
};

class SingularChartError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  using Error::Error;
};

class NonMonotoneError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Thermodynamic scalars that can serve as chart coordinates or as
/// differentiated quantities.
enum class Quantity { S, V, T, P, U };

std::string_view to_string(Quantity q);
Quantity quantity_from_string(std::string_view name);

/// The four coordinate charts on the equilibrium surface. Axis order is
/// part of the chart: SV is (S, V), TV is (T, V), TP is (T, P), SP is (S, P).
enum class Chart { SV, TV, TP, SP };

std::string_view to_string(Chart c);
Chart chart_from_string(std::string_view name);
std::pair<Quantity, Quantity> axes(Chart c);

/// Index of `q` among the axes of `c` (0 or 1); throws DomainError if
/// `q` is not a coordinate of the chart.
int axis_index(Chart c, Quantity q);

/// A point in one chart, in reduced units.
class StatePoint {
 public:
  /// Validates finiteness and positivity of V and T coordinates.
  static StatePoint make(Chart chart, double c1, double c2);
  static StatePoint sv(double s, double v) { return make(Chart::SV, s, v); }

  Chart chart() const { return chart_; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }

  /// Coordinate value for an axis quantity of this chart.
  double coordinate(Quantity q) const;

  friend bool operator==(const StatePoint&, const StatePoint&) = default;

 private:
  StatePoint(Chart chart, double c1, double c2) : chart_(chart), c1_(c1), c2_(c2) {}

  Chart chart_;
  double c1_;
  double c2_;
};

/// Numerical tolerances shared by every module. Immutable once built.
class Tolerances {
 public:
  Tolerances() = default;
  Tolerances(double deriv_rel, double quad_abs, double newton_tol, int max_newton_iter);

  /// Defaults for finite-difference derivative engines (looser deriv_rel).
  static Tolerances finite_difference();

  double deriv_rel() const { return deriv_rel_; }
  double quad_abs() const { return quad_abs_; }
  double newton_tol() const { return newton_tol_; }
  int max_newton_iter() const { return max_newton_iter_; }

 private:
  double deriv_rel_ = 1e-8;
  double quad_abs_ = 1e-10;
  double newton_tol_ = 1e-12;
  int max_newton_iter_ = 64;
};

/// Unit convention used throughout: N k_B = 1 and every quantity is
/// dimensionless, so the ideal gas law reads P V = T.
std::string reduced_units_doc();

}  // namespace thermoform
