#pragma once

#include <array>
#include <optional>
#include <vector>

#include "config.hpp"

namespace thermoform::app {

struct Grid {
  double s_lo, s_hi, v_lo, v_hi;
  int ns, nv;

  /// Row-major (S outer) list of SV points, endpoints included.
  std::vector<StatePoint> points() const;
};

enum class FormKind { energy, heat, work };
std::string_view to_string(FormKind f);
OneForm make_form(const EosModel& model, FormKind f);

struct MaxwellParams {
  Grid grid;
  std::vector<int> cases{1, 2, 3, 4};
  double tolerance = 1e-8;
};

struct ClosureParams {
  Grid grid;
  double tolerance = 1e-8;
};

struct PathParams {
  StatePoint from = StatePoint::sv(0, 1);
  StatePoint to = StatePoint::sv(0, 1);
  PathFamily family;
  FormKind form = FormKind::energy;
  double tolerance = 1e-8;
};

struct SegmentSpec {
  SegmentKind kind;
  StatePoint start = StatePoint::sv(0, 1);
  double target = 0.0;              // constrained kinds
  std::optional<StatePoint> end;    // general segments
};

struct CarnotSpec {
  double t_hot, t_cold, s_lo, s_hi;
};

struct CycleParams {
  std::optional<CarnotSpec> carnot;
  std::vector<SegmentSpec> segments;
  double tolerance = 1e-8;
};

struct RandomPolynomials {
  std::uint64_t seed;
  int count;
};

struct GreenParams {
  std::array<double, 4> rectangle;  // s_lo, s_hi, v_lo, v_hi
  std::vector<FormKind> forms{FormKind::heat, FormKind::work};
  std::optional<RandomPolynomials> random_polynomials;
  double tolerance = 1e-8;
};

MaxwellParams parse_maxwell(const json& p, const EosModel& model);
ClosureParams parse_closure(const json& p, const EosModel& model);
PathParams parse_path_task(const json& p, const EosModel& model, double default_tolerance);
CycleParams parse_cycle(const json& p, const EosModel& model);
GreenParams parse_green(const json& p, const EosModel& model);

/// The seed a task's randomness derives from, if it has any.
std::optional<std::uint64_t> task_seed(const TaskSpec& spec);

}  // namespace thermoform::app
