#pragma once

#include <functional>
#include <span>

namespace thermoform {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // summed Gauss–Kronrod error estimate
  int intervals = 0;
};

/// Globally adaptive 15-point Gauss–Kronrod quadrature with an absolute
/// error target. The interval with the largest error estimate is bisected
/// until the summed estimate is below `abs_tol` (or below the rounding
/// floor of the integrand). Throws QuadratureError when `max_intervals`
/// is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_intervals = 4000);

/// Same, with the interval pre-split at `breaks` (sorted, strictly inside
/// (a, b)) so that kinks of the integrand fall on interval ends.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breaks, double abs_tol,
                           int max_intervals = 4000);

}  // namespace thermoform
