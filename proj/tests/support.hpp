#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "thermoform/eos.hpp"

namespace thermoform::testing {

// Hand-rolled generator for property tests; fixed seeds keep failures
// reproducible.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % (hi - lo + 1)); }

  StatePoint sv_in(double s_lo, double s_hi, double v_lo, double v_hi) {
    return StatePoint::sv(uniform(s_lo, s_hi), uniform(v_lo, v_hi));
  }

 private:
  std::mt19937_64 engine_;
};

// Closed forms of the reduced ideal gas used as independent oracles.
inline double ig_energy(double s, double v) { return std::pow(v, -2.0 / 3.0) * std::exp(2.0 * s / 3.0); }
inline double ig_temperature(double s, double v) { return 2.0 / 3.0 * ig_energy(s, v); }
inline double ig_pressure(double s, double v) { return 2.0 / 3.0 * ig_energy(s, v) / v; }
// S on the isotherm: S = (3/2) ln(3T/2) + ln V.
inline double ig_entropy(double t, double v) { return 1.5 * std::log(1.5 * t) + std::log(v); }

}  // namespace thermoform::testing
