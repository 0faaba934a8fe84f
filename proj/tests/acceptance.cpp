// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status
// if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "app/catalog.hpp"
#include "app/runner.hpp"
#include "thermoform/thermoform.hpp"

using namespace thermoform;

namespace {

// Independent oracles.
constexpr double kDeltaU = 0.226995558960795598547517555953;       // U(1, 2) - U(0, 1)
constexpr double kRectLoop = 0.350699007041316840475108955615;     // ∮ T dS on [0,1] x [1,2]
constexpr double kTwoPathWork = 0.027695787294931884;              // normal sin(pi t) bump, size 0.1

double ig_energy(double s, double v) { return std::pow(v, -2.0 / 3.0) * std::exp(2.0 * s / 3.0); }

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double operator()(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 rng_;
};

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::vector<StatePoint> grid10() {
  std::vector<StatePoint> pts;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) pts.push_back(StatePoint::sv(i / 9.0, 1.0 + j / 9.0));
  }
  return pts;
}

// Largest |residual| over the grid per case, both routes, plus the route gap.
struct MaxwellSweep {
  std::array<double, 4> worst{};
  double gap = 0.0;
};

MaxwellSweep maxwell_sweep(const EosModel& m) {
  MaxwellSweep out;
  for (const StatePoint& p : grid10()) {
    for (const MaxwellCase& c : MaxwellCase::all()) {
      const double jac = maxwell_residual_jacobian(m, c, p);
      const double par = maxwell_residual_partials(m, c, p);
      double& w = out.worst[c.index - 1];
      w = std::max({w, std::abs(jac), std::abs(par)});
      out.gap = std::max(out.gap, std::abs(jac - par));
    }
  }
  return out;
}

Outcome criterion1() {
  double worst = 0.0, gap = 0.0;
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    const MaxwellSweep s = maxwell_sweep(m);
    worst = std::max(worst, *std::max_element(s.worst.begin(), s.worst.end()));
    gap = std::max(gap, s.gap);
  }
  return {worst <= 1e-8 && gap <= 1e-9,
          "ideal gas + van der Waals, 10x10 grid, 4 cases x 2 routes: max residual " + fmt("%.3g", worst) +
              " (<= 1e-8), route gap " + fmt("%.3g", gap) + " (<= 1e-9)"};
}

// Maximum |EL residual| along `paths` random monotone paths.
double euler_lagrange_sweep(const EosModel& m, int paths, std::uint64_t seed) {
  Uniform u(seed);
  double worst = 0.0;
  for (int i = 0; i < paths; ++i) {
    const StatePoint a = StatePoint::sv(u(0, 0.4), u(1, 1.4));
    const StatePoint b = StatePoint::sv(u(0.6, 1), u(1.6, 2));
    const Path p = generate_paths({PathGenerator::monotone_spline, seed + i, 2}, a, b, m.domain())[1];
    for (int k = 1; k <= 9; ++k) {
      const auto r = euler_lagrange_residuals(m, p, k / 10.0);
      worst = std::max({worst, std::abs(r[0]), std::abs(r[1])});
    }
  }
  return worst;
}

Outcome criterion2() {
  double gap = 0.0, el = 0.0;
  for (const EosModel& m : {ideal_gas(), van_der_waals(0.1, 0.05)}) {
    Uniform u(2);
    for (int i = 0; i < 100; ++i) {
      const StatePoint p = StatePoint::sv(u(0, 1), u(1, 2));
      gap = std::max(gap, std::abs(closure_residual(m, p) - maxwell_residual_partials(m, MaxwellCase::get(1), p)));
    }
    el = std::max(el, euler_lagrange_sweep(m, 10, 200));
  }
  return {gap <= 1e-12 && el <= 1e-8,
          "closure vs case-1 at 100 points: gap " + fmt("%.3g", gap) + " (<= 1e-12); Euler-Lagrange on 10 monotone "
          "paths: " + fmt("%.3g", el) + " (<= 1e-8)"};
}

Outcome criterion3() {
  const EosModel m = ideal_gas();
  Uniform u(3);
  double spread = 0.0, oracle_err = 0.0;
  for (int pair = 0; pair < 50; ++pair) {
    const StatePoint a = StatePoint::sv(u(0, 1), u(1, 2));
    const StatePoint b = StatePoint::sv(u(0, 1), u(1, 2));
    const double exact = ig_energy(b.c1(), b.c2()) - ig_energy(a.c1(), a.c2());
    const auto paths = generate_paths({PathGenerator::fourier_perturbed, static_cast<std::uint64_t>(pair), 10, 0.1},
                                      a, b, m.domain());
    double lo = INFINITY, hi = -INFINITY;
    for (const Path& p : paths) {
      const double w = action(m, p);
      lo = std::min(lo, w);
      hi = std::max(hi, w);
      oracle_err = std::max(oracle_err, std::abs(w - exact));
    }
    // Spread relative to the energy scale of the pair (|ΔU| alone can vanish).
    const double scale = std::max({std::abs(exact), ig_energy(a.c1(), a.c2()), ig_energy(b.c1(), b.c2())});
    spread = std::max(spread, (hi - lo) / scale);
  }
  const double reference = action(m, Path::segment(StatePoint::sv(0, 1), StatePoint::sv(1, 2)));
  const double ref_err = std::abs(reference - kDeltaU);
  return {spread <= 1e-8 && oracle_err <= 1e-8 && ref_err <= 1e-8,
          "50 pairs x 10 paths: relative spread " + fmt("%.3g", spread) + " (<= 1e-8), max |action - dU oracle| " +
              fmt("%.3g", oracle_err) + " (<= 1e-8); (0,1)->(1,2) action " + fmt("%.10f", reference)};
}

Outcome criterion4() {
  const EosModel m = ideal_gas();
  const Path loop = Path::rectangle_loop(0, 1, 1, 2);
  const double du = loop_integral(energy_form(m), loop);
  const double tds = loop_integral(heat_form(m), loop);
  const double pdv = -loop_integral(work_form(m), loop);
  const bool ok = std::abs(du) <= 1e-9 && std::abs(tds - 0.35070) <= 1e-4 && std::abs(pdv - 0.35070) <= 1e-4 &&
                  std::abs(tds - kRectLoop) <= 1e-9 && std::abs(pdv - kRectLoop) <= 1e-9;
  return {ok, "rectangle [0,1]x[1,2]: |loop dU| " + fmt("%.3g", std::abs(du)) + " (<= 1e-9), loop TdS " +
                  fmt("%.8f", tds) + ", loop PdV " + fmt("%.8f", pdv) + " (0.35070 +- 1e-4)"};
}

Outcome criterion5() {
  const EosModel m = ideal_gas();
  auto gap = [](const OneForm& w, double s0, double s1, double v0, double v1) {
    return std::abs(loop_integral(w, Path::rectangle_loop(s0, s1, v0, v1)) -
                    region_integral(exterior_derivative(w), Region::rectangle(s0, s1, v0, v1)));
  };
  double worst = std::max(gap(heat_form(m), 0, 1, 1, 2), gap(work_form(m), 0, 1, 1, 2));
  Uniform u(5);
  for (int i = 0; i < 20; ++i) {
    std::array<double, 12> c{};
    for (double& x : c) x = u(-1, 1);
    auto quad = [](std::array<double, 12> k, int o) {
      return Field([k, o](Dual x, Dual y) {
        return Dual(k[o]) + k[o + 1] * x + k[o + 2] * y + k[o + 3] * x * x + k[o + 4] * x * y + k[o + 5] * y * y;
      });
    };
    const OneForm w{Chart::SV, quad(c, 0), quad(c, 6)};
    const double s0 = u(-1, 1), v0 = u(0.5, 2);
    worst = std::max(worst, gap(w, s0, s0 + u(0.1, 1), v0, v0 + u(0.1, 1)));
  }
  return {worst <= 1e-8, "heat, work and 20 random quadratic forms: max |loop - region| " + fmt("%.3g", worst) +
                             " (<= 1e-8)"};
}

const Path kGamma = Path::segment(StatePoint::sv(0, 1), StatePoint::sv(1, 2));
const PathFamily kFourier{PathGenerator::fourier_perturbed, 6, 20, 0.1};

double max_abs_delta(const std::vector<VariationalResult>& rs) {
  double w = 0.0;
  for (const auto& r : rs) w = std::max(w, std::abs(r.delta));
  return w;
}

Outcome criterion6() {
  const EosModel m = ideal_gas();
  const double du = max_abs_delta(variational_check(m, kGamma, kFourier));
  const double dw_sweep = max_abs_delta(variational_check(work_form(m), kGamma, kFourier, m.domain()));
  const double c = 0.1 / std::numbers::sqrt2;
  const Path bent = kGamma.perturbed({-c}, {c});
  const double dw_two = std::abs(line_integral(work_form(m), bent) - line_integral(work_form(m), kGamma));
  return {du <= 1e-9 && dw_sweep > 1e-3 && std::abs(dw_two - kTwoPathWork) <= 1e-9,
          "20 Fourier perturbations (amplitude 0.1): max |dU| " + fmt("%.3g", du) + " (<= 1e-9), max |dW| " +
              fmt("%.4g", dw_sweep) + " (> 1e-3); two-path |dW| " + fmt("%.9f", dw_two) + " vs oracle " +
              fmt("%.9f", kTwoPathWork)};
}

Outcome criterion7() {
  const EosModel m = ideal_gas();
  Uniform u(7);
  double eff = 0.0, first_law = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double t_cold = u(0.2, 1.0);
    const double t_hot = t_cold + u(0.1, 1.0);
    const double s_lo = u(-1, 1);
    const double s_hi = s_lo + u(0.1, 1.5);
    const CycleReport r = run_cycle(m, carnot_cycle(m, t_hot, t_cold, s_lo, s_hi));
    eff = std::max(eff, std::abs(r.efficiency - (1.0 - t_cold / t_hot)));
    const double scale = std::abs(r.q_in - r.q_out) + std::abs(r.w_net);
    first_law = std::max(first_law, std::abs(r.loop_energy) / scale);
  }
  return {eff <= 1e-6 && first_law <= 1e-8, "20 random Carnot cycles: max |efficiency - (1 - Tc/Th)| " +
                                                fmt("%.3g", eff) + " (<= 1e-6), max relative |loop dU| " +
                                                fmt("%.3g", first_law) + " (<= 1e-8)"};
}

Outcome criterion8() {
  const EosModel m = corrupted(ideal_gas());
  // Criterion 1: every case's worst residual.
  const MaxwellSweep s = maxwell_sweep(m);
  const double maxwell = *std::min_element(s.worst.begin(), s.worst.end());
  // Criterion 2: closure and Euler-Lagrange magnitudes.
  Uniform u(8);
  double closure = INFINITY;
  for (int i = 0; i < 100; ++i) closure = std::min(closure, std::abs(closure_residual(m, StatePoint::sv(u(0, 1), u(1, 2)))));
  const double el = euler_lagrange_sweep(m, 10, 800);
  // Criterion 6: δU per unit area swept between the perturbed and straight paths.
  const auto rs = variational_check(m, kGamma, kFourier);
  double ratio = INFINITY;
  for (const auto& r : rs) {
    const auto coeffs = fourier_coefficients(kFourier.seed, r.index, kFourier.amplitude);
    const double area = enclosed_area(Path::concat({kGamma.perturbed(coeffs[0], coeffs[1]), kGamma.reversed()}));
    ratio = std::min(ratio, std::abs(r.delta) / std::abs(area));
  }
  const bool ok = maxwell >= 0.5 && closure >= 0.5 && el >= 0.5 && ratio >= 0.5 && max_abs_delta(rs) > 1e-9;
  return {ok, "P -> P + S: min over cases of max Maxwell residual " + fmt("%.3g", maxwell) + ", min |closure| " +
                  fmt("%.3g", closure) + ", max |Euler-Lagrange| " + fmt("%.3g", el) + ", min |dU|/area " +
                  fmt("%.6f", ratio) + " (each >= 0.5)"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome criterion9() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "thermoform-acceptance-determinism";
  fs::remove_all(root);
  fs::create_directories(root);
  auto run_into = [&](const std::string& name) {
    auto config = app::example_config();
    config["output_dir"] = (root / name).string();
    const fs::path file = root / (name + ".json");
    std::ofstream(file, std::ios::binary) << config.dump(2);
    std::ostringstream out, err;
    return app::run(file, out, err);
  };
  const int first = run_into("a"), second = run_into("b");
  int files = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    identical += slurp(entry.path()) == slurp(root / "b" / entry.path().filename());
  }
  fs::remove_all(root);
  return {first == 0 && second == 0 && files > 0 && identical == files,
          "two runs of the seeded example config: " + std::to_string(identical) + "/" + std::to_string(files) +
              " tabular files bitwise identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Maxwell suite", criterion1},       {"closure <=> Maxwell", criterion2}, {"path independence", criterion3},
      {"loop law", criterion4},            {"Green/Stokes", criterion5},        {"variational contrast", criterion6},
      {"Carnot", criterion7},              {"negative control", criterion8},    {"determinism", criterion9}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << i + 1 << ". " << criteria[i].first << ": " << o.detail << "\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
