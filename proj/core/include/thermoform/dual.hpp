#pragma once

#include <cmath>

namespace thermoform {

/// Forward-mode dual number a + b·ε with ε² = 0. The ε part carries one
/// directional derivative through ordinary arithmetic.
struct Dual {
  double v = 0.0;  // value
  double d = 0.0;  // derivative

  constexpr Dual() = default;
  constexpr Dual(double value) : v(value) {}  // NOLINT: implicit promotion of constants
  constexpr Dual(double value, double deriv) : v(value), d(deriv) {}

  static constexpr Dual variable(double value) { return {value, 1.0}; }

  constexpr Dual& operator+=(Dual o) {
    v += o.v;
    d += o.d;
    return *this;
  }
  constexpr Dual& operator-=(Dual o) {
    v -= o.v;
    d -= o.d;
    return *this;
  }
  constexpr Dual& operator*=(Dual o) {
    d = d * o.v + v * o.d;
    v *= o.v;
    return *this;
  }
  constexpr Dual& operator/=(Dual o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

constexpr Dual operator-(Dual a) { return {-a.v, -a.d}; }
constexpr Dual operator+(Dual a, Dual b) { return a += b; }
constexpr Dual operator-(Dual a, Dual b) { return a -= b; }
constexpr Dual operator*(Dual a, Dual b) { return a *= b; }
constexpr Dual operator/(Dual a, Dual b) { return a /= b; }

inline Dual exp(Dual a) {
  const double e = std::exp(a.v);
  return {e, e * a.d};
}

inline Dual log(Dual a) { return {std::log(a.v), a.d / a.v}; }

inline Dual pow(Dual a, double p) {
  const double ap = std::pow(a.v, p);
  return {ap, p * std::pow(a.v, p - 1.0) * a.d};
}

inline Dual sqrt(Dual a) {
  const double r = std::sqrt(a.v);
  return {r, 0.5 * a.d / r};
}

inline Dual sin(Dual a) { return {std::sin(a.v), std::cos(a.v) * a.d}; }
inline Dual cos(Dual a) { return {std::cos(a.v), -std::sin(a.v) * a.d}; }

inline double value_of(double x) { return x; }
inline double value_of(Dual x) { return x.v; }

}  // namespace thermoform
