#include "params.hpp"

#include <cmath>
#include <set>

namespace thermoform::app {

namespace {

void allow_only(const json& obj, const std::set<std::string>& keys, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!keys.count(key)) throw ConfigError(where + ": unknown parameter '" + key + "'");
  }
}

const json& required(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ConfigError(where + ": missing required parameter '" + key + "'");
  return obj.at(key);
}

double finite_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError("'" + name + "' must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError("'" + name + "' must be finite");
  return x;
}

double tolerance(const json& p, double fallback) {
  if (!p.contains("tolerance")) return fallback;
  const double t = finite_number(p.at("tolerance"), "tolerance");
  if (!(t > 0)) throw ConfigError("'tolerance' must be positive");
  return t;
}

std::array<double, 2> pair(const json& v, const std::string& name) {
  if (!v.is_array() || v.size() != 2) throw ConfigError("'" + name + "' must be a two-element array");
  return {finite_number(v[0], name), finite_number(v[1], name)};
}

StatePoint point_in(const json& v, const std::string& name, const EosModel& model) {
  const auto sv = pair(v, name);
  if (!model.domain().contains(sv[0], sv[1])) {
    throw ConfigError("'" + name + "' = (" + std::to_string(sv[0]) + ", " + std::to_string(sv[1]) +
                      ") lies outside the model domain");
  }
  return StatePoint::sv(sv[0], sv[1]);
}

std::uint64_t seed_of(const json& v, const std::string& name) {
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() && v.get<long long>() < 0)) {
    throw ConfigError("'" + name + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

int positive_int(const json& v, const std::string& name, int max) {
  if (!v.is_number_integer()) throw ConfigError("'" + name + "' must be an integer");
  const long long n = v.get<long long>();
  if (n < 1 || n > max) throw ConfigError("'" + name + "' must be in [1, " + std::to_string(max) + "]");
  return static_cast<int>(n);
}

Grid parse_grid(const json& g, const EosModel& model) {
  allow_only(g, {"s", "v", "n"}, "grid");
  const auto s = pair(required(g, "s", "grid"), "grid.s");
  const auto v = pair(required(g, "v", "grid"), "grid.v");
  const json& n = required(g, "n", "grid");
  if (!n.is_array() || n.size() != 2) throw ConfigError("'grid.n' must be [ns, nv]");
  Grid grid{s[0], s[1], v[0], v[1], positive_int(n[0], "grid.n", 1000), positive_int(n[1], "grid.n", 1000)};
  if (!(grid.s_lo <= grid.s_hi) || !(grid.v_lo <= grid.v_hi)) throw ConfigError("grid ranges must be [lo, hi]");
  if ((grid.ns > 1) != (grid.s_lo < grid.s_hi) || (grid.nv > 1) != (grid.v_lo < grid.v_hi)) {
    throw ConfigError("a grid axis with one node needs a degenerate range and vice versa");
  }
  const DomainBox& box = model.domain();
  if (!box.contains(grid.s_lo, grid.v_lo) || !box.contains(grid.s_hi, grid.v_hi)) {
    throw ConfigError("grid leaves the model domain");
  }
  return grid;
}

FormKind parse_form(const json& v) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "energy") return FormKind::energy;
    if (s == "heat") return FormKind::heat;
    if (s == "work") return FormKind::work;
  }
  throw ConfigError("form must be one of energy, heat, work");
}

PathFamily parse_family(const json& f) {
  allow_only(f, {"generator", "seed", "count", "amplitude"}, "family");
  PathFamily family;
  const json& g = required(f, "generator", "family");
  if (!g.is_string()) throw ConfigError("'family.generator' must be a string");
  try {
    family.generator = path_generator_from_string(g.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  // Every family is seeded, including the deterministic generators, so a
  // config never changes meaning when its generator is switched.
  family.seed = seed_of(required(f, "seed", "family"), "family.seed");
  family.count = positive_int(required(f, "count", "family"), "family.count", 10000);
  if (f.contains("amplitude")) {
    family.amplitude = finite_number(f.at("amplitude"), "family.amplitude");
    if (!(family.amplitude > 0)) throw ConfigError("'family.amplitude' must be positive");
  }
  return family;
}

SegmentSpec parse_segment(const json& s, const EosModel& model, std::size_t index) {
  const std::string where = "segments[" + std::to_string(index) + "]";
  if (!s.is_object()) throw ConfigError(where + " must be an object");
  const json& kind = required(s, "kind", where);
  if (!kind.is_string()) throw ConfigError(where + ": 'kind' must be a string");
  SegmentSpec spec{};
  try {
    spec.kind = segment_kind_from_string(kind.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(where + ": " + e.what());
  }
  spec.start = point_in(required(s, "start", where), where + ".start", model);
  if (spec.kind == SegmentKind::general) {
    allow_only(s, {"kind", "start", "end"}, where);
    spec.end = point_in(required(s, "end", where), where + ".end", model);
  } else {
    allow_only(s, {"kind", "start", "target"}, where);
    spec.target = finite_number(required(s, "target", where), where + ".target");
  }
  return spec;
}

}  // namespace

std::vector<StatePoint> Grid::points() const {
  std::vector<StatePoint> out;
  out.reserve(static_cast<std::size_t>(ns) * nv);
  for (int i = 0; i < ns; ++i) {
    const double s = ns == 1 ? s_lo : std::lerp(s_lo, s_hi, static_cast<double>(i) / (ns - 1));
    for (int j = 0; j < nv; ++j) {
      const double v = nv == 1 ? v_lo : std::lerp(v_lo, v_hi, static_cast<double>(j) / (nv - 1));
      out.push_back(StatePoint::sv(s, v));
    }
  }
  return out;
}

std::string_view to_string(FormKind f) {
  switch (f) {
    case FormKind::energy: return "energy";
    case FormKind::heat: return "heat";
    case FormKind::work: return "work";
  }
  return "?";
}

OneForm make_form(const EosModel& model, FormKind f) {
  switch (f) {
    case FormKind::energy: return energy_form(model);
    case FormKind::heat: return heat_form(model);
    case FormKind::work: return work_form(model);
  }
  return energy_form(model);
}

MaxwellParams parse_maxwell(const json& p, const EosModel& model) {
  allow_only(p, {"grid", "cases", "tolerance"}, "parameters");
  MaxwellParams out;
  out.grid = parse_grid(required(p, "grid", "parameters"), model);
  if (p.contains("cases")) {
    const json& c = p.at("cases");
    if (!c.is_array() || c.empty()) throw ConfigError("'cases' must be a non-empty array");
    out.cases.clear();
    std::set<int> seen;
    for (const json& k : c) {
      const int index = positive_int(k, "cases", 4);
      if (!seen.insert(index).second) throw ConfigError("'cases' lists case " + std::to_string(index) + " twice");
      out.cases.push_back(index);
    }
  }
  out.tolerance = tolerance(p, out.tolerance);
  return out;
}

ClosureParams parse_closure(const json& p, const EosModel& model) {
  allow_only(p, {"grid", "tolerance"}, "parameters");
  ClosureParams out;
  out.grid = parse_grid(required(p, "grid", "parameters"), model);
  out.tolerance = tolerance(p, out.tolerance);
  return out;
}

PathParams parse_path_task(const json& p, const EosModel& model, double default_tolerance) {
  allow_only(p, {"from", "to", "family", "form", "tolerance"}, "parameters");
  PathParams out;
  out.from = point_in(required(p, "from", "parameters"), "from", model);
  out.to = point_in(required(p, "to", "parameters"), "to", model);
  out.family = parse_family(required(p, "family", "parameters"));
  if (p.contains("form")) out.form = parse_form(p.at("form"));
  out.tolerance = tolerance(p, default_tolerance);
  return out;
}

CycleParams parse_cycle(const json& p, const EosModel& model) {
  allow_only(p, {"carnot", "segments", "tolerance"}, "parameters");
  CycleParams out;
  if (p.contains("carnot") == p.contains("segments")) {
    throw ConfigError("exactly one of 'carnot' or 'segments' is required");
  }
  if (p.contains("carnot")) {
    const json& c = p.at("carnot");
    allow_only(c, {"t_hot", "t_cold", "s_lo", "s_hi"}, "carnot");
    CarnotSpec spec{finite_number(required(c, "t_hot", "carnot"), "carnot.t_hot"),
                    finite_number(required(c, "t_cold", "carnot"), "carnot.t_cold"),
                    finite_number(required(c, "s_lo", "carnot"), "carnot.s_lo"),
                    finite_number(required(c, "s_hi", "carnot"), "carnot.s_hi")};
    if (!(spec.t_hot > spec.t_cold) || !(spec.t_cold > 0)) throw ConfigError("carnot needs t_hot > t_cold > 0");
    if (!(spec.s_hi > spec.s_lo)) throw ConfigError("carnot needs s_hi > s_lo");
    const DomainBox& box = model.domain();
    if (spec.s_lo < box.s_lo || spec.s_hi > box.s_hi) throw ConfigError("carnot entropies leave the model domain");
    out.carnot = spec;
  } else {
    const json& segs = p.at("segments");
    if (!segs.is_array() || segs.empty()) throw ConfigError("'segments' must be a non-empty array");
    for (std::size_t i = 0; i < segs.size(); ++i) out.segments.push_back(parse_segment(segs[i], model, i));
  }
  out.tolerance = tolerance(p, out.tolerance);
  return out;
}

GreenParams parse_green(const json& p, const EosModel& model) {
  allow_only(p, {"rectangle", "forms", "random_polynomials", "tolerance"}, "parameters");
  GreenParams out{};
  const json& r = required(p, "rectangle", "parameters");
  if (!r.is_array() || r.size() != 4) throw ConfigError("'rectangle' must be [s_lo, s_hi, v_lo, v_hi]");
  for (std::size_t i = 0; i < 4; ++i) out.rectangle[i] = finite_number(r[i], "rectangle");
  const auto [s_lo, s_hi, v_lo, v_hi] = out.rectangle;
  if (!(s_lo < s_hi) || !(v_lo < v_hi)) throw ConfigError("'rectangle' must have positive area");
  if (!model.domain().contains(s_lo, v_lo) || !model.domain().contains(s_hi, v_hi)) {
    throw ConfigError("'rectangle' leaves the model domain");
  }
  out.forms = {FormKind::heat, FormKind::work};
  if (p.contains("forms")) {
    const json& f = p.at("forms");
    if (!f.is_array()) throw ConfigError("'forms' must be an array");
    out.forms.clear();
    for (const json& k : f) out.forms.push_back(parse_form(k));
  }
  if (p.contains("random_polynomials")) {
    const json& rp = p.at("random_polynomials");
    allow_only(rp, {"seed", "count"}, "random_polynomials");
    out.random_polynomials = RandomPolynomials{seed_of(required(rp, "seed", "random_polynomials"),
                                                       "random_polynomials.seed"),
                                               positive_int(required(rp, "count", "random_polynomials"),
                                                            "random_polynomials.count", 10000)};
  }
  if (out.forms.empty() && !out.random_polynomials) throw ConfigError("green-check has nothing to check");
  out.tolerance = tolerance(p, out.tolerance);
  return out;
}

std::optional<std::uint64_t> task_seed(const TaskSpec& spec) {
  const json& p = spec.params;
  if (p.contains("family") && p.at("family").contains("seed")) return p.at("family").at("seed").get<std::uint64_t>();
  if (p.contains("random_polynomials")) return p.at("random_polynomials").at("seed").get<std::uint64_t>();
  return std::nullopt;
}

}  // namespace thermoform::app
