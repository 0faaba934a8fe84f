#pragma once

#include <string_view>
#include <vector>

#include "thermoform/eos.hpp"
#include "thermoform/paths.hpp"

namespace thermoform {

enum class SegmentKind { isentropic, isochoric, isothermal, isobaric, general };

std::string_view to_string(SegmentKind k);
SegmentKind segment_kind_from_string(std::string_view name);

/// A process step between two SV points and the path that realizes it.
struct Segment {
  SegmentKind kind;
  StatePoint start;
  StatePoint end;
  Path path;
};

/// Builds a constrained process from `start`.
///
/// `target` is the end volume for an isentrope and the end entropy for the
/// other kinds. Isotherms are parametrized by volume with S recovered from
/// the (T, V) chart at every sample; isobars are parametrized by entropy
/// with V recovered from the (S, P) chart. Throws BracketError when the
/// constraint leaves the domain box.
Segment build_segment(const EosModel& model, SegmentKind kind, const StatePoint& start,
                      double target, const Tolerances& tol = {});

/// Straight segment in (S, V).
Segment general_segment(const StatePoint& start, const StatePoint& end);

/// The isotherm at temperature `t` between two entropies.
Segment isotherm(const EosModel& model, double t, double s_from, double s_to,
                 const Tolerances& tol = {});

struct CycleReport {
  double q_in = 0.0;   // ∫ T dS where dS > 0
  double q_out = 0.0;  // -∫ T dS where dS < 0
  double w_net = 0.0;  // ∮ P dV
  double efficiency = 0.0;
  double first_law_residual = 0.0;  // |Q_in - Q_out - W_net|
  double loop_energy = 0.0;         // ∮ dU
  bool first_law_ok = false;        // |∮ dU| <= 1e-8 (|∮ T dS| + |∮ P dV|) + 10 quad_abs
};

/// Integrates T dS and P dV around a closed head-to-tail chain of
/// segments. Throws DomainError if the chain does not close.
CycleReport run_cycle(const EosModel& model, const std::vector<Segment>& segments,
                      const Tolerances& tol = {});

/// Carnot cycle: isotherm at t_hot from s_lo to s_hi, isentrope down to
/// t_cold, isotherm back to s_lo, isentrope up to t_hot.
std::vector<Segment> carnot_cycle(const EosModel& model, double t_hot, double t_cold, double s_lo,
                                  double s_hi, const Tolerances& tol = {});

}  // namespace thermoform
