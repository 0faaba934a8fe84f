#include "catalog.hpp"

#include "params.hpp"

namespace thermoform::app {

namespace {

const ParamInfo kTolerance{"tolerance", "pass threshold on the maximum residual"};
const ParamInfo kGrid{"grid", "{\"s\": [lo, hi], \"v\": [lo, hi], \"n\": [ns, nv]} SV grid, endpoints included"};
const ParamInfo kFrom{"from", "[S, V] start point"};
const ParamInfo kTo{"to", "[S, V] end point"};
const ParamInfo kFamily{"family",
                        "{\"generator\": straight_line|monotone_spline|fourier_perturbed, \"seed\": n, "
                        "\"count\": n, \"amplitude\": x}; seed is mandatory"};

json grid_example() { return {{"s", {0.0, 1.0}}, {"v", {1.0, 2.0}}, {"n", {10, 10}}}; }

std::vector<TaskInfo> build_catalog() {
  std::vector<TaskInfo> c;
  c.push_back({"check-maxwell",
               "maxwell",
               "Maxwell residuals by the Jacobian and partial-derivative routes on a grid; one report per case",
               {kGrid},
               {{"cases", "subset of [1, 2, 3, 4] (default all)"}, {kTolerance.name, kTolerance.description + " (1e-8)"}},
               false,
               {{"grid", grid_example()}}});
  c.push_back({"verify-closure",
               "lagrangian",
               "Closure residual T_V + P_S of the Lagrangian 1-form on a grid, with the case-1 cross-check",
               {kGrid},
               {{kTolerance.name, kTolerance.description + " (1e-8)"}},
               false,
               {{"grid", grid_example()}}});
  c.push_back({"integrate-path",
               "paths",
               "Line integral of a 1-form along a seeded path family; residual is the deviation from the "
               "closed-form energy change (energy form) or from the straight-segment value",
               {kFrom, kTo, kFamily},
               {{"form", "energy | heat | work (default energy)"}, {kTolerance.name, kTolerance.description + " (1e-8)"}},
               true,
               {{"from", {0.0, 1.0}},
                {"to", {1.0, 2.0}},
                {"family", {{"generator", "fourier_perturbed"}, {"seed", 7}, {"count", 10}, {"amplitude", 0.1}}}}});
  c.push_back({"variational-sweep",
               "lagrangian",
               "Change of the path functional under fixed-endpoint deformations of the straight segment",
               {kFrom, kTo, kFamily},
               {{"form", "energy | heat | work (default energy)"}, {kTolerance.name, kTolerance.description + " (1e-9)"}},
               true,
               {{"from", {0.0, 1.0}},
                {"to", {1.0, 2.0}},
                {"family", {{"generator", "fourier_perturbed"}, {"seed", 11}, {"count", 10}, {"amplitude", 0.1}}}}});
  c.push_back({"run-cycle",
               "cycles",
               "Heat, work and first-law bookkeeping around a closed cycle; residual is |loop dU| relative to "
               "|Q_net| + |W|",
               {{"carnot | segments",
                 "either {\"t_hot\", \"t_cold\", \"s_lo\", \"s_hi\"} or a list of {\"kind\", \"start\": [S, V], "
                 "\"target\"} / {\"kind\": \"general\", \"start\", \"end\"}"}},
               {{kTolerance.name, kTolerance.description + " (1e-8)"}},
               false,
               {{"carnot", {{"t_hot", 2.0 / 3.0}, {"t_cold", 1.0 / 3.0}, {"s_lo", 0.0}, {"s_hi", 1.0}}}}});
  c.push_back({"green-check",
               "paths",
               "Loop integral against the region integral of the exterior derivative on a rectangle",
               {{"rectangle", "[s_lo, s_hi, v_lo, v_hi]"}},
               {{"forms", "list of energy | heat | work (default [heat, work])"},
                {"random_polynomials",
                 "{\"seed\": n, \"count\": n} random quadratic forms on random sub-rectangles; seed is mandatory"},
                {kTolerance.name, kTolerance.description + " (1e-8)"}},
               false,
               {{"rectangle", {0.0, 1.0, 1.0, 2.0}}, {"random_polynomials", {{"seed", 3}, {"count", 20}}}}});
  return c;
}

}  // namespace

const std::vector<TaskInfo>& task_catalog() {
  static const std::vector<TaskInfo> catalog = build_catalog();
  return catalog;
}

const TaskInfo* find_task(std::string_view name) {
  for (const TaskInfo& t : task_catalog()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

void validate_task(const TaskSpec& spec, const EosModel& model) {
  if (spec.task == "check-maxwell") {
    parse_maxwell(spec.params, model);
  } else if (spec.task == "verify-closure") {
    parse_closure(spec.params, model);
  } else if (spec.task == "integrate-path") {
    parse_path_task(spec.params, model, 1e-8);
  } else if (spec.task == "variational-sweep") {
    parse_path_task(spec.params, model, 1e-9);
  } else if (spec.task == "run-cycle") {
    parse_cycle(spec.params, model);
  } else if (spec.task == "green-check") {
    parse_green(spec.params, model);
  } else {
    throw ConfigError("unknown task '" + spec.task + "'");
  }
}

json example_config() {
  json tasks = json::array();
  for (const TaskInfo& t : task_catalog()) {
    json entry = t.example;
    entry["task"] = t.name;
    tasks.push_back(entry);
  }
  return {{"model", {{"name", "ideal_gas"}}},
          {"derivative_mode", "analytic"},
          {"output_dir", "thermoform-out"},
          {"tasks", tasks}};
}

json catalog_json() {
  json out = json::array();
  for (const TaskInfo& t : task_catalog()) {
    auto params = [](const std::vector<ParamInfo>& list) {
      json a = json::array();
      for (const ParamInfo& p : list) a.push_back({{"name", p.name}, {"description", p.description}});
      return a;
    };
    out.push_back({{"name", t.name},
                   {"module", t.module},
                   {"summary", t.summary},
                   {"required", params(t.required)},
                   {"optional", params(t.optional)},
                   {"randomized", t.randomized},
                   {"example", t.example}});
  }
  return out;
}

}  // namespace thermoform::app
