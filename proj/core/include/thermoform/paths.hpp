#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "thermoform/calculus.hpp"
#include "thermoform/core.hpp"
#include "thermoform/eos.hpp"

namespace thermoform {

/// A parametrized curve t -> (S(t), V(t)) on [0, 1] with its tangent.
///
/// `breaks` lists parameter values where the tangent may jump (polyline
/// corners, segment joins); quadrature splits there.
class Path {
 public:
  using Fn = std::function<double(double)>;

  Path(Fn s, Fn v, Fn ds, Fn dv, std::vector<double> breaks = {});

  static Path segment(const StatePoint& from, const StatePoint& to);
  static Path constant(const StatePoint& at);
  /// Straight pieces through the vertices, one unit of parameter per piece.
  static Path polyline(const std::vector<StatePoint>& vertices);
  /// Counterclockwise boundary of [s_lo, s_hi] x [v_lo, v_hi], starting at
  /// (s_lo, v_lo).
  static Path rectangle_loop(double s_lo, double s_hi, double v_lo, double v_hi);
  /// Pieces joined head to tail, each given an equal share of [0, 1].
  static Path concat(const std::vector<Path>& pieces);

  std::array<double, 2> operator()(double t) const { return {s_(t), v_(t)}; }
  std::array<double, 2> tangent(double t) const { return {ds_(t), dv_(t)}; }
  double s(double t) const { return s_(t); }
  double v(double t) const { return v_(t); }
  double ds(double t) const { return ds_(t); }
  double dv(double t) const { return dv_(t); }

  StatePoint start() const;
  StatePoint end() const;
  /// Endpoints coincide to 1e-14 in both coordinates.
  bool closed() const;
  const std::vector<double>& breaks() const { return breaks_; }

  Path reversed() const;
  /// Restriction to [t0, t1], reparametrized onto [0, 1].
  Path restricted(double t0, double t1) const;
  /// Adds sum_k amp[k] sin((k+1) pi t) to each coordinate; endpoints stay
  /// fixed exactly.
  Path perturbed(const std::vector<double>& s_amplitudes,
                 const std::vector<double>& v_amplitudes) const;

  /// Sampled containment check (`samples` evenly spaced parameters plus
  /// breaks).
  bool within(const DomainBox& box, int samples = 257) const;

 private:
  Fn s_;
  Fn v_;
  Fn ds_;
  Fn dv_;
  std::vector<double> breaks_;
};

/// Integration domain: an axis-aligned rectangle, or the interior of a
/// counterclockwise simple loop that is star-shaped about its sample mean.
class Region {
 public:
  static Region rectangle(double s_lo, double s_hi, double v_lo, double v_hi);
  static Region bounded_by(const Path& loop, const Tolerances& tol = {});

  bool is_rectangle() const { return !loop_.has_value(); }
  std::array<double, 4> bounds() const { return rect_; }
  Path boundary() const;
  double area() const { return area_; }

 private:
  std::array<double, 4> rect_{};
  std::optional<Path> loop_;
  double area_ = 0.0;
};

enum class PathGenerator { straight_line, monotone_spline, fourier_perturbed };

std::string_view to_string(PathGenerator g);
PathGenerator path_generator_from_string(std::string_view name);

struct PathFamily {
  PathGenerator generator = PathGenerator::straight_line;
  std::uint64_t seed = 0;
  int count = 1;
  double amplitude = 0.1;  // fourier_perturbed only
};

/// Number of Fourier modes sin(k pi t), k = 1..kFourierModes.
inline constexpr int kFourierModes = 5;

/// Seeded Fourier coefficients for the i-th member of a family:
/// amplitude * u_k / k with u_k uniform on [-1, 1]. Returns {s_amps, v_amps}.
std::array<std::vector<double>, 2> fourier_coefficients(std::uint64_t seed, int index,
                                                        double amplitude, int attempt = 0);

/// Deterministic family of distinct paths sharing the endpoints exactly.
/// Fourier members leaving the box are resampled a bounded number of times
/// before DomainError is thrown.
std::vector<Path> generate_paths(const PathFamily& family, const StatePoint& from,
                                 const StatePoint& to, const DomainBox& box);

/// ∫ comp1 dS + comp2 dV along the path. Throws DomainError if the form
/// carries a domain and the path leaves it.
double line_integral(const OneForm& form, const Path& path, const Tolerances& tol = {});
double line_integral(const OneForm& form, const Path& path, const DomainBox& box,
                     const Tolerances& tol = {});
/// line_integral over a closed path; rejects open paths.
double loop_integral(const OneForm& form, const Path& loop, const Tolerances& tol = {});
/// ∬ coeff dS dV over the region.
double region_integral(const TwoForm& form, const Region& region, const Tolerances& tol = {});

/// ∮ S dV, the signed area enclosed by a closed path (counterclockwise
/// positive).
double enclosed_area(const Path& loop, const Tolerances& tol = {});

/// Parameters in (0, 1) where the derivative of coordinate `axis`
/// (0: S, 1: V) changes sign, located by sampling and bisection.
std::vector<double> turning_points(const Path& path, int axis, int samples = 512);

}  // namespace thermoform
