#include "thermoform/core.hpp"

#include <cmath>
#include <sstream>

namespace thermoform {

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::S: return "S";
    case Quantity::V: return "V";
    case Quantity::T: return "T";
    case Quantity::P: return "P";
    case Quantity::U: return "U";
  }
  return "?";
}

Quantity quantity_from_string(std::string_view name) {
  for (Quantity q : {Quantity::S, Quantity::V, Quantity::T, Quantity::P, Quantity::U}) {
    if (to_string(q) == name) return q;
  }
  throw DomainError("unknown quantity '" + std::string(name) + "'");
}

std::string_view to_string(Chart c) {
  switch (c) {
    case Chart::SV: return "SV";
    case Chart::TV: return "TV";
    case Chart::TP: return "TP";
    case Chart::SP: return "SP";
  }
  return "?";
}

Chart chart_from_string(std::string_view name) {
  for (Chart c : {Chart::SV, Chart::TV, Chart::TP, Chart::SP}) {
    if (to_string(c) == name) return c;
  }
  throw DomainError("unknown chart '" + std::string(name) + "'");
}

std::pair<Quantity, Quantity> axes(Chart c) {
  switch (c) {
    case Chart::SV: return {Quantity::S, Quantity::V};
    case Chart::TV: return {Quantity::T, Quantity::V};
    case Chart::TP: return {Quantity::T, Quantity::P};
    case Chart::SP: return {Quantity::S, Quantity::P};
  }
  throw DomainError("invalid chart");
}

int axis_index(Chart c, Quantity q) {
  auto [a, b] = axes(c);
  if (q == a) return 0;
  if (q == b) return 1;
  std::ostringstream msg;
  msg << to_string(q) << " is not a coordinate of chart " << to_string(c);
  throw DomainError(msg.str());
}

StatePoint StatePoint::make(Chart chart, double c1, double c2) {
  if (!std::isfinite(c1) || !std::isfinite(c2)) {
    throw DomainError("state point coordinates must be finite");
  }
  auto [q1, q2] = axes(chart);
  auto check_positive = [](Quantity q, double x) {
    if ((q == Quantity::V || q == Quantity::T) && !(x > 0.0)) {
      throw DomainError(std::string(to_string(q)) + " coordinate must be strictly positive");
    }
  };
  check_positive(q1, c1);
  check_positive(q2, c2);
  return StatePoint(chart, c1, c2);
}

double StatePoint::coordinate(Quantity q) const {
  return axis_index(chart_, q) == 0 ? c1_ : c2_;
}

Tolerances::Tolerances(double deriv_rel, double quad_abs, double newton_tol, int max_newton_iter)
    : deriv_rel_(deriv_rel),
      quad_abs_(quad_abs),
      newton_tol_(newton_tol),
      max_newton_iter_(max_newton_iter) {
  if (!(deriv_rel > 0) || !(quad_abs > 0) || !(newton_tol > 0)) {
    throw DomainError("tolerances must be strictly positive");
  }
  if (max_newton_iter < 1) {
    throw DomainError("max_newton_iter must be at least 1");
  }
}

Tolerances Tolerances::finite_difference() { return Tolerances(1e-5, 1e-10, 1e-12, 64); }

std::string reduced_units_doc() { return "NkB=1; S,V,T,P,U dimensionless"; }

}  // namespace thermoform
