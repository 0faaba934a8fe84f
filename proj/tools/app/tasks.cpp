#include "tasks.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "catalog.hpp"
#include "params.hpp"

namespace thermoform::app {

namespace {

Report blank(const TaskSpec& spec, std::string id_suffix = {}) {
  Report r;
  r.task_id = spec.id + id_suffix;
  r.task = spec.task;
  r.module = find_task(spec.task)->module;
  return r;
}

std::string index_label(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

std::vector<Report> check_maxwell(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const MaxwellParams p = parse_maxwell(spec.params, model);
  const Differentiator engine(config.derivative_mode, config.tolerances);
  const auto points = p.grid.points();
  std::vector<Report> out;
  for (int index : p.cases) {
    const MaxwellCase& c = MaxwellCase::get(index);
    Report r = blank(spec, "-case" + std::to_string(index));
    r.label_columns = {"point"};
    r.value_columns = {"s", "v", "jacobian", "partials", "route_gap", "maxwell_residual"};
    r.residual_column = "maxwell_residual";
    r.tolerance = p.tolerance;
    double max_gap = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const StatePoint& pt = points[i];
      const double jac = maxwell_residual_jacobian(model, c, pt, engine);
      const double par = maxwell_residual_partials(model, c, pt, engine);
      const double gap = std::abs(jac - par);
      max_gap = std::max(max_gap, gap);
      r.rows.push_back({{index_label("p", i)}, {pt.c1(), pt.c2(), jac, par, gap, std::max(std::abs(jac), std::abs(par))}});
    }
    r.summary = {{"case", index},
                 {"statement", std::string(c.statement)},
                 {"held_chart", std::string(to_string(c.held_chart))},
                 {"derivative_mode", std::string(to_string(config.derivative_mode))},
                 {"max_route_gap", max_gap}};
    out.push_back(std::move(r));
  }
  return out;
}

Report verify_closure(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const ClosureParams p = parse_closure(spec.params, model);
  const Differentiator engine(config.derivative_mode, config.tolerances);
  Report r = blank(spec);
  r.label_columns = {"point"};
  r.value_columns = {"s", "v", "closure", "case1", "gap", "closure_residual"};
  r.residual_column = "closure_residual";
  r.tolerance = p.tolerance;
  const auto points = p.grid.points();
  double max_gap = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const StatePoint& pt = points[i];
    const double closure = closure_residual(model, pt, engine);
    const double case1 = maxwell_residual_partials(model, MaxwellCase::get(1), pt, engine);
    const double gap = std::abs(closure - case1);
    max_gap = std::max(max_gap, gap);
    r.rows.push_back({{index_label("p", i)}, {pt.c1(), pt.c2(), closure, case1, gap, std::abs(closure)}});
  }
  r.summary = {{"derivative_mode", std::string(to_string(config.derivative_mode))}, {"max_case1_gap", max_gap}};
  return r;
}

json family_json(const PathFamily& f) {
  return {{"generator", std::string(to_string(f.generator))},
          {"seed", f.seed},
          {"count", f.count},
          {"amplitude", f.amplitude}};
}

Report integrate_path(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const PathParams p = parse_path_task(spec.params, model, 1e-8);
  const OneForm form = make_form(model, p.form);
  const Tolerances& tol = config.tolerances;
  double reference = 0.0;
  if (p.form == FormKind::energy) {
    reference = model.energy(p.to.c1(), p.to.c2()) - model.energy(p.from.c1(), p.from.c2());
  } else {
    reference = line_integral(form, Path::segment(p.from, p.to), model.domain(), tol);
  }
  Report r = blank(spec);
  r.label_columns = {"path"};
  r.value_columns = {"value", "reference", "path_deviation"};
  r.residual_column = "path_deviation";
  r.tolerance = p.tolerance;
  const auto paths = generate_paths(p.family, p.from, p.to, model.domain());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const double value = line_integral(form, paths[i], model.domain(), tol);
    r.rows.push_back({{index_label("path", i)}, {value, reference, std::abs(value - reference)}});
  }
  r.summary = {{"form", std::string(to_string(p.form))},
               {"reference", reference},
               {"reference_kind", p.form == FormKind::energy ? "closed-form energy difference" : "straight segment"},
               {"family", family_json(p.family)}};
  return r;
}

Report variational_sweep(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const PathParams p = parse_path_task(spec.params, model, 1e-9);
  const Path gamma = Path::segment(p.from, p.to);
  const auto results = p.form == FormKind::energy
                           ? variational_check(model, gamma, p.family, config.tolerances)
                           : variational_check(make_form(model, p.form), gamma, p.family, model.domain(),
                                               config.tolerances);
  Report r = blank(spec);
  r.label_columns = {"path"};
  r.value_columns = {"action_before", "action_after", "delta", "variation"};
  r.residual_column = "variation";
  r.tolerance = p.tolerance;
  for (const VariationalResult& v : results) {
    r.rows.push_back({{index_label("path", static_cast<std::size_t>(v.index))},
                      {v.action_before, v.action_after, v.delta, std::abs(v.delta)}});
  }
  r.summary = {{"form", std::string(to_string(p.form))}, {"family", family_json(p.family)}};
  return r;
}

Report run_cycle_task(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const CycleParams p = parse_cycle(spec.params, model);
  const Tolerances& tol = config.tolerances;
  std::vector<Segment> segments;
  if (p.carnot) {
    segments = carnot_cycle(model, p.carnot->t_hot, p.carnot->t_cold, p.carnot->s_lo, p.carnot->s_hi, tol);
  } else {
    for (const SegmentSpec& s : p.segments) {
      segments.push_back(s.kind == SegmentKind::general ? general_segment(s.start, *s.end)
                                                        : build_segment(model, s.kind, s.start, s.target, tol));
    }
  }
  const CycleReport cycle = run_cycle(model, segments, tol);

  // Residuals are taken relative to max(1, |Q_net| + |W_net|).
  const double scale = std::max(1.0, std::abs(cycle.q_in - cycle.q_out) + std::abs(cycle.w_net));
  Report r = blank(spec);
  r.label_columns = {"segment", "kind"};
  r.value_columns = {"s_start", "v_start", "s_end", "v_end", "heat", "work", "energy", "first_law_residual"};
  r.residual_column = "first_law_residual";
  r.tolerance = p.tolerance;
  const OneForm heat = heat_form(model), energy = energy_form(model);
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment& seg = segments[i];
    const double q = line_integral(heat, seg.path, model.domain(), tol);
    const double w = -line_integral(work_form(model), seg.path, model.domain(), tol);
    const double du = line_integral(energy, seg.path, model.domain(), tol);
    const double exact = model.energy(seg.end.c1(), seg.end.c2()) - model.energy(seg.start.c1(), seg.start.c2());
    r.rows.push_back({{index_label("seg", i), std::string(to_string(seg.kind))},
                      {seg.start.c1(), seg.start.c2(), seg.end.c1(), seg.end.c2(), q, w, du,
                       std::abs(du - exact) / scale}});
  }
  const auto first = segments.front().start;
  r.rows.push_back({{"cycle", "loop"},
                    {first.c1(), first.c2(), first.c1(), first.c2(), cycle.q_in - cycle.q_out, cycle.w_net,
                     cycle.loop_energy, std::abs(cycle.loop_energy) / scale}});
  r.summary = {{"q_in", cycle.q_in},
               {"q_out", cycle.q_out},
               {"w_net", cycle.w_net},
               {"efficiency", cycle.efficiency},
               {"first_law_residual", cycle.first_law_residual},
               {"loop_energy", cycle.loop_energy},
               {"first_law_ok", cycle.first_law_ok}};
  if (p.carnot) r.summary["carnot_efficiency"] = 1.0 - p.carnot->t_cold / p.carnot->t_hot;
  return r;
}

// Random quadratic 1-form p dS + q dV with coefficients uniform on [-1, 1].
OneForm random_quadratic(std::mt19937_64& rng, std::array<double, 12>& c) {
  auto uniform = [&rng] { return -1.0 + 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  for (double& x : c) x = uniform();
  auto poly = [](std::array<double, 6> k) {
    return Field([k](Dual x, Dual y) {
      return Dual(k[0]) + k[1] * x + k[2] * y + k[3] * x * x + k[4] * x * y + k[5] * y * y;
    });
  };
  return {Chart::SV, poly({c[0], c[1], c[2], c[3], c[4], c[5]}), poly({c[6], c[7], c[8], c[9], c[10], c[11]})};
}

Report green_check(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  const GreenParams p = parse_green(spec.params, model);
  const Tolerances& tol = config.tolerances;
  const Differentiator engine(config.derivative_mode, tol);
  Report r = blank(spec);
  r.label_columns = {"check"};
  r.value_columns = {"s_lo", "s_hi", "v_lo", "v_hi", "loop", "region", "green_gap"};
  r.residual_column = "green_gap";
  r.tolerance = p.tolerance;
  auto check = [&](const std::string& label, const OneForm& form, std::array<double, 4> rect) {
    const auto [s_lo, s_hi, v_lo, v_hi] = rect;
    const double loop = loop_integral(form, Path::rectangle_loop(s_lo, s_hi, v_lo, v_hi), tol);
    const double region =
        region_integral(exterior_derivative(form, engine), Region::rectangle(s_lo, s_hi, v_lo, v_hi), tol);
    r.rows.push_back({{label}, {s_lo, s_hi, v_lo, v_hi, loop, region, std::abs(loop - region)}});
  };
  for (FormKind f : p.forms) check(std::string(to_string(f)), make_form(model, f), p.rectangle);
  if (p.random_polynomials) {
    std::mt19937_64 rng(p.random_polynomials->seed);
    const auto [s_lo, s_hi, v_lo, v_hi] = p.rectangle;
    for (int i = 0; i < p.random_polynomials->count; ++i) {
      std::array<double, 12> coeffs{};
      const OneForm form = random_quadratic(rng, coeffs);
      auto sub = [&rng](double lo, double hi) {
        const double a = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double b = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        // Sub-intervals span at least a tenth of the range.
        const double u = std::min(a, b) * 0.9, w = 0.1 + std::abs(a - b) * 0.9;
        return std::array<double, 2>{lo + (hi - lo) * u, lo + (hi - lo) * std::min(1.0, u + w)};
      };
      const auto s = sub(s_lo, s_hi);
      const auto v = sub(v_lo, v_hi);
      check(index_label("poly", static_cast<std::size_t>(i)), form, {s[0], s[1], v[0], v[1]});
    }
  }
  r.summary = {{"rectangle", p.rectangle}};
  return r;
}

}  // namespace

std::vector<Report> run_task(const TaskSpec& spec, const RunConfig& config, const EosModel& model) {
  try {
    if (spec.task == "check-maxwell") return check_maxwell(spec, config, model);
    if (spec.task == "verify-closure") return {verify_closure(spec, config, model)};
    if (spec.task == "integrate-path") return {integrate_path(spec, config, model)};
    if (spec.task == "variational-sweep") return {variational_sweep(spec, config, model)};
    if (spec.task == "run-cycle") return {run_cycle_task(spec, config, model)};
    if (spec.task == "green-check") return {green_check(spec, config, model)};
  } catch (const Error& e) {
    Report r = blank(spec);
    r.residual_column = "residual";
    r.error = e.what();
    return {r};
  }
  throw ConfigError("unknown task '" + spec.task + "'");
}

}  // namespace thermoform::app
