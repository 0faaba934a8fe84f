#include "thermoform/cycles.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "thermoform/calculus.hpp"
#include "thermoform/quadrature.hpp"

namespace thermoform {

namespace {

constexpr double kChainTol = 1e-10;

bool joins(const StatePoint& a, const StatePoint& b) {
  return std::abs(a.c1() - b.c1()) <= kChainTol * std::max(1.0, std::abs(a.c1())) &&
         std::abs(a.c2() - b.c2()) <= kChainTol * std::max(1.0, std::abs(a.c2()));
}

// Isotherm between two SV points on the same temperature, parametrized by V.
Path isotherm_path(const EosModel& model, double t_star, const StatePoint& a, const StatePoint& b,
                   const Tolerances& tol) {
  const double s0 = a.c1(), v0 = a.c2(), s1 = b.c1(), v1 = b.c2();
  auto s_of = [=](double t) {
    if (t <= 0.0) return s0;
    if (t >= 1.0) return s1;
    const double v = std::lerp(v0, v1, t);
    return invert_to_chart(model, StatePoint::make(Chart::TV, t_star, v), tol).c1();
  };
  auto ds_of = [=](double t) {
    const double s = s_of(t);
    const double v = std::lerp(v0, v1, t);
    const auto g = model.gradient(Quantity::T, s, v);
    return -g[1] / g[0] * (v1 - v0);
  };
  return Path(s_of, [=](double t) { return std::lerp(v0, v1, t); }, ds_of,
              [=](double) { return v1 - v0; });
}

// Isobar between two SV points on the same pressure, parametrized by S.
Path isobar_path(const EosModel& model, double p_star, const StatePoint& a, const StatePoint& b,
                 const Tolerances& tol) {
  const double s0 = a.c1(), v0 = a.c2(), s1 = b.c1(), v1 = b.c2();
  auto v_of = [=](double t) {
    if (t <= 0.0) return v0;
    if (t >= 1.0) return v1;
    const double s = std::lerp(s0, s1, t);
    return invert_to_chart(model, StatePoint::make(Chart::SP, s, p_star), tol).c2();
  };
  auto dv_of = [=](double t) {
    const double s = std::lerp(s0, s1, t);
    const auto g = model.gradient(Quantity::P, s, v_of(t));
    return -g[0] / g[1] * (s1 - s0);
  };
  return Path([=](double t) { return std::lerp(s0, s1, t); }, v_of, [=](double) { return s1 - s0; },
              dv_of);
}

}  // namespace

std::string_view to_string(SegmentKind k) {
  switch (k) {
    case SegmentKind::isentropic: return "isentropic";
    case SegmentKind::isochoric: return "isochoric";
    case SegmentKind::isothermal: return "isothermal";
    case SegmentKind::isobaric: return "isobaric";
    case SegmentKind::general: return "general";
  }
  return "?";
}

SegmentKind segment_kind_from_string(std::string_view name) {
  for (auto k : {SegmentKind::isentropic, SegmentKind::isochoric, SegmentKind::isothermal,
                 SegmentKind::isobaric, SegmentKind::general}) {
    if (to_string(k) == name) return k;
  }
  throw DomainError("unknown segment kind '" + std::string(name) + "'");
}

Segment build_segment(const EosModel& model, SegmentKind kind, const StatePoint& start,
                      double target, const Tolerances& tol) {
  if (start.chart() != Chart::SV) throw DomainError("segments start from an SV point");
  const DomainBox& box = model.domain();
  if (!box.contains(start.c1(), start.c2())) throw DomainError("segment start outside the domain box");
  const double s0 = start.c1();
  const double v0 = start.c2();

  switch (kind) {
    case SegmentKind::isentropic: {
      if (target < box.v_lo || target > box.v_hi) throw BracketError("isentrope leaves the domain box");
      const StatePoint end = StatePoint::sv(s0, target);
      return {kind, start, end, Path::segment(start, end)};
    }
    case SegmentKind::isochoric: {
      if (target < box.s_lo || target > box.s_hi) throw BracketError("isochore leaves the domain box");
      const StatePoint end = StatePoint::sv(target, v0);
      return {kind, start, end, Path::segment(start, end)};
    }
    case SegmentKind::isothermal: {
      const double t_star = model.temperature(s0, v0);
      const StatePoint end = StatePoint::sv(target, volume_at(model, target, t_star, tol));
      return {kind, start, end, isotherm_path(model, t_star, start, end, tol)};
    }
    case SegmentKind::isobaric: {
      const double p_star = model.pressure(s0, v0);
      const StatePoint end = invert_to_chart(model, StatePoint::make(Chart::SP, target, p_star), tol);
      return {kind, start, end, isobar_path(model, p_star, start, end, tol)};
    }
    case SegmentKind::general:
      break;
  }
  throw DomainError("general segments need an end point; use general_segment");
}

Segment general_segment(const StatePoint& start, const StatePoint& end) {
  return {SegmentKind::general, start, end, Path::segment(start, end)};
}

Segment isotherm(const EosModel& model, double t, double s_from, double s_to, const Tolerances& tol) {
  const StatePoint a = StatePoint::sv(s_from, volume_at(model, s_from, t, tol));
  const StatePoint b = StatePoint::sv(s_to, volume_at(model, s_to, t, tol));
  return {SegmentKind::isothermal, a, b, isotherm_path(model, t, a, b, tol)};
}

CycleReport run_cycle(const EosModel& model, const std::vector<Segment>& segments,
                      const Tolerances& tol) {
  if (segments.empty()) throw DomainError("a cycle needs at least one segment");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& next = segments[(i + 1) % segments.size()];
    if (!joins(segments[i].end, next.start)) {
      std::ostringstream msg;
      msg << "segment " << i << " does not join segment " << (i + 1) % segments.size();
      throw DomainError(msg.str());
    }
  }

  CycleReport r;
  const OneForm du = energy_form(model);
  for (const Segment& seg : segments) {
    const Path& p = seg.path;
    if (!p.within(model.domain())) throw DomainError("cycle segment leaves the domain box");
    auto heat = [&](double t, double sign) {
      const double ds = sign * p.ds(t);
      return ds > 0.0 ? model.temperature(p.s(t), p.v(t)) * ds : 0.0;
    };
    r.q_in += integrate([&](double t) { return heat(t, 1.0); }, 0.0, 1.0, p.breaks(), tol.quad_abs()).value;
    r.q_out += integrate([&](double t) { return heat(t, -1.0); }, 0.0, 1.0, p.breaks(), tol.quad_abs()).value;
    r.w_net += integrate([&](double t) { return p.dv(t) == 0.0 ? 0.0 : model.pressure(p.s(t), p.v(t)) * p.dv(t); },
                         0.0, 1.0, p.breaks(), tol.quad_abs())
                   .value;
    r.loop_energy += line_integral(du, p, tol);
  }
  const double heat_net = r.q_in - r.q_out;
  r.first_law_residual = std::abs(heat_net - r.w_net);
  r.efficiency = r.q_in > 0.0 ? r.w_net / r.q_in : 0.0;
  r.first_law_ok =
      std::abs(r.loop_energy) <= 1e-8 * (std::abs(heat_net) + std::abs(r.w_net)) + 10.0 * tol.quad_abs();
  return r;
}

std::vector<Segment> carnot_cycle(const EosModel& model, double t_hot, double t_cold, double s_lo,
                                  double s_hi, const Tolerances& tol) {
  if (!(t_hot > t_cold) || !(t_cold > 0.0)) throw DomainError("Carnot cycle needs t_hot > t_cold > 0");
  if (!(s_hi > s_lo)) throw DomainError("Carnot cycle needs s_hi > s_lo");
  const double v_hot_lo = volume_at(model, s_lo, t_hot, tol);
  const double v_cold_hi = volume_at(model, s_hi, t_cold, tol);

  std::vector<Segment> out;
  out.push_back(isotherm(model, t_hot, s_lo, s_hi, tol));
  out.push_back(build_segment(model, SegmentKind::isentropic, out.back().end, v_cold_hi, tol));
  Segment cold = isotherm(model, t_cold, s_hi, s_lo, tol);
  out.push_back(std::move(cold));
  out.push_back(build_segment(model, SegmentKind::isentropic, out.back().end, v_hot_lo, tol));
  return out;
}

}  // namespace thermoform
