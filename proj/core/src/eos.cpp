#include "thermoform/eos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include <boost/math/tools/roots.hpp>

namespace thermoform {

namespace {

template <class Model>
class ModelAdaptor final : public detail::EosImpl {
 public:
  explicit ModelAdaptor(Model m) : m_(std::move(m)) {}

  double energy(double s, double v) const override { return m_.energy(s, v); }
  Dual energy(Dual s, Dual v) const override { return m_.energy(s, v); }
  double temperature(double s, double v) const override { return m_.temperature(s, v); }
  Dual temperature(Dual s, Dual v) const override { return m_.temperature(s, v); }
  double pressure(double s, double v) const override { return m_.pressure(s, v); }
  Dual pressure(Dual s, Dual v) const override { return m_.pressure(s, v); }
  SecondPartials second_partials(double s, double v) const override {
    return m_.second_partials(s, v);
  }

 private:
  Model m_;
};

struct IdealGasLaw {
  template <class X>
  X energy(X s, X v) const {
    using std::exp;
    using std::pow;
    return pow(v, -2.0 / 3.0) * exp(2.0 * s / 3.0);
  }
  template <class X>
  X temperature(X s, X v) const {
    return (2.0 / 3.0) * energy(s, v);
  }
  template <class X>
  X pressure(X s, X v) const {
    return (2.0 / 3.0) * energy(s, v) / v;
  }
  SecondPartials second_partials(double s, double v) const {
    const double t = temperature(s, v);
    const double p = pressure(s, v);
    return {(2.0 / 3.0) * t, -(2.0 / 3.0) * t / v, (2.0 / 3.0) * p, -(5.0 / 3.0) * p / v};
  }
};

struct VanDerWaalsLaw {
  double a;
  double b;

  template <class X>
  X temperature(X s, X v) const {
    using std::exp;
    using std::pow;
    return (2.0 / 3.0) * pow(v - b, -2.0 / 3.0) * exp(2.0 * s / 3.0);
  }
  template <class X>
  X energy(X s, X v) const {
    return 1.5 * temperature(s, v) - a / v;
  }
  template <class X>
  X pressure(X s, X v) const {
    return temperature(s, v) / (v - b) - a / (v * v);
  }
  SecondPartials second_partials(double s, double v) const {
    const double t = temperature(s, v);
    const double w = v - b;
    return {(2.0 / 3.0) * t, -(2.0 / 3.0) * t / w, (2.0 / 3.0) * t / w,
            -(5.0 / 3.0) * t / (w * w) + 2.0 * a / (v * v * v)};
  }
};

class CorruptedImpl final : public detail::EosImpl {
 public:
  explicit CorruptedImpl(EosModel base) : base_(std::move(base)) {}

  double energy(double s, double v) const override { return base_.energy(s, v); }
  Dual energy(Dual s, Dual v) const override { return base_.energy(s, v); }
  double temperature(double s, double v) const override { return base_.temperature(s, v); }
  Dual temperature(Dual s, Dual v) const override { return base_.temperature(s, v); }
  double pressure(double s, double v) const override { return base_.pressure(s, v) + s; }
  Dual pressure(Dual s, Dual v) const override { return base_.pressure(s, v) + s; }
  SecondPartials second_partials(double s, double v) const override {
    SecondPartials h = base_.second_partials(s, v);
    h.p_s += 1.0;
    return h;
  }

 private:
  EosModel base_;
};

DomainBox default_ideal_box() { return DomainBox::make(-5.0, 5.0, 0.01, 100.0); }

// Rejects boxes that leave V > b or cross into a region with non-positive
// T or P, or where either isentropic or isothermal compressibility changes
// sign (spinodal).
void check_single_phase(const EosModel& m) {
  const DomainBox& box = m.domain();
  constexpr int n = 24;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double s = box.s_lo + (box.s_hi - box.s_lo) * i / n;
      const double v = box.v_lo + (box.v_hi - box.v_lo) * j / n;
      const double t = m.temperature(s, v);
      const double p = m.pressure(s, v);
      const SecondPartials h = m.second_partials(s, v);
      const double dp_dv_isotherm = h.p_v - h.p_s * h.t_v / h.t_s;
      if (!(t > 0) || !(p > 0) || !(h.p_v < 0) || !(dp_dv_isotherm < 0) || !(h.t_s > 0)) {
        std::ostringstream msg;
        msg << m.name() << ": domain box is not single-phase at (S,V) = (" << s << ", " << v
            << ")";
        throw DomainError(msg.str());
      }
    }
  }
}

std::array<double, 2> solve2(const std::array<double, 4>& j, double r1, double r2) {
  const double det = j[0] * j[3] - j[1] * j[2];
  if (det == 0.0 || !std::isfinite(det)) {
    throw SingularChartError("singular chart Jacobian during inversion");
  }
  return {(j[3] * r1 - j[1] * r2) / det, (-j[2] * r1 + j[0] * r2) / det};
}

// ∂(q1, q2)/∂(S, V) as a row-major 2x2 matrix.
std::array<double, 4> chart_jacobian(const EosModel& m, Chart chart, double s, double v) {
  auto [q1, q2] = axes(chart);
  const auto g1 = m.gradient(q1, s, v);
  const auto g2 = m.gradient(q2, s, v);
  return {g1[0], g1[1], g2[0], g2[1]};
}

int newton_digits(double newton_tol) {
  const int d = static_cast<int>(std::ceil(-std::log2(newton_tol))) + 2;
  return std::clamp(d, 8, std::numeric_limits<double>::digits - 1);
}

// Solves f(x) = target on [lo, hi] where f is monotone; f_and_df returns
// (f(x), f'(x)).
template <class F>
double solve_monotone(F f_and_df, double target, double lo, double hi, const Tolerances& tol,
                      const char* what) {
  const double f_lo = f_and_df(lo).first - target;
  const double f_hi = f_and_df(hi).first - target;
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0) == (f_hi > 0)) {
    std::ostringstream msg;
    msg << "no root for " << what << " = " << target << " inside the domain box";
    throw BracketError(msg.str());
  }
  // Start from the secant guess of the bracket.
  double guess = lo - f_lo * (hi - lo) / (f_hi - f_lo);
  guess = std::clamp(guess, lo, hi);
  std::uintmax_t iters = static_cast<std::uintmax_t>(tol.max_newton_iter());
  const std::uintmax_t limit = iters;
  auto shifted = [&](double x) {
    auto [fx, dfx] = f_and_df(x);
    return std::make_pair(fx - target, dfx);
  };
  const double x = boost::math::tools::newton_raphson_iterate(shifted, guess, lo, hi,
                                                              newton_digits(tol.newton_tol()), iters);
  const double residual = std::abs(shifted(x).first);
  if (iters >= limit && residual > tol.newton_tol() * std::max(1.0, std::abs(target))) {
    std::ostringstream msg;
    msg << "Newton inversion for " << what << " did not converge in " << limit << " iterations";
    throw ConvergenceError(msg.str());
  }
  return x;
}

std::array<double, 2> invert_tp(const EosModel& m, double t_star, double p_star,
                                const Tolerances& tol) {
  const DomainBox& box = m.domain();
  auto residual = [&](double s, double v) -> std::array<double, 2> {
    return {m.temperature(s, v) / t_star - 1.0, m.pressure(s, v) / p_star - 1.0};
  };
  auto norm = [](const std::array<double, 2>& r) { return std::max(std::abs(r[0]), std::abs(r[1])); };

  // Seed from the best point of a coarse grid over the box.
  constexpr int n = 16;
  double s = 0.5 * (box.s_lo + box.s_hi);
  double v = 0.5 * (box.v_lo + box.v_hi);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const double si = box.s_lo + (box.s_hi - box.s_lo) * i / n;
      // Geometric spacing in V resolves the low-volume end of wide boxes.
      const double vj = box.v_lo * std::pow(box.v_hi / box.v_lo, static_cast<double>(j) / n);
      const double r = norm(residual(si, vj));
      if (std::isfinite(r) && r < best) {
        best = r;
        s = si;
        v = vj;
      }
    }
  }

  // Once the residual meets the tolerance, a few full Newton steps that keep
  // reducing it bring the state to rounding level; S and V can be worse
  // conditioned than (T, P).
  auto polish = [&](std::array<double, 2> r_cur) -> std::array<double, 2> {
    for (int k = 0; k < 3; ++k) {
      auto j = chart_jacobian(m, Chart::TP, s, v);
      j[0] /= t_star;
      j[1] /= t_star;
      j[2] /= p_star;
      j[3] /= p_star;
      const auto step = solve2(j, -r_cur[0], -r_cur[1]);
      const double s_new = s + step[0];
      const double v_new = v + step[1];
      if (!box.contains(s_new, v_new)) break;
      const auto r_new = residual(s_new, v_new);
      if (!(norm(r_new) < norm(r_cur))) break;
      s = s_new;
      v = v_new;
      r_cur = r_new;
    }
    return {s, v};
  };

  std::array<double, 2> r = residual(s, v);
  int pinned = 0;
  for (int it = 0; it < tol.max_newton_iter(); ++it) {
    if (norm(r) <= tol.newton_tol()) return polish(r);
    auto j = chart_jacobian(m, Chart::TP, s, v);
    j[0] /= t_star;
    j[1] /= t_star;
    j[2] /= p_star;
    j[3] /= p_star;
    const auto step = solve2(j, -r[0], -r[1]);

    double lambda = 1.0;
    double s_new = s;
    double v_new = v;
    std::array<double, 2> r_new = r;
    bool clamped = false;
    while (lambda > 1e-6) {
      s_new = s + lambda * step[0];
      v_new = v + lambda * step[1];
      clamped = s_new < box.s_lo || s_new > box.s_hi || v_new < box.v_lo || v_new > box.v_hi;
      s_new = std::clamp(s_new, box.s_lo, box.s_hi);
      v_new = std::clamp(v_new, box.v_lo, box.v_hi);
      r_new = residual(s_new, v_new);
      if (std::isfinite(norm(r_new)) && norm(r_new) < norm(r)) break;
      lambda *= 0.5;
    }
    if (!(norm(r_new) < norm(r))) {
      if (clamped) break;
      throw ConvergenceError("Newton inversion in chart TP stalled");
    }
    pinned = clamped ? pinned + 1 : 0;
    if (pinned >= 3) break;
    const bool small_step = std::abs(s_new - s) <= tol.newton_tol() * std::max(1.0, std::abs(s)) &&
                            std::abs(v_new - v) <= tol.newton_tol() * std::max(1.0, v);
    s = s_new;
    v = v_new;
    r = r_new;
    if (small_step && norm(r) <= std::sqrt(tol.newton_tol())) return polish(r);
  }
  if (norm(r) <= tol.newton_tol()) return polish(r);
  const bool on_boundary = s == box.s_lo || s == box.s_hi || v == box.v_lo || v == box.v_hi;
  std::ostringstream msg;
  msg << "(T, P) = (" << t_star << ", " << p_star << ")";
  if (on_boundary) throw BracketError("no solution inside the domain box for " + msg.str());
  throw ConvergenceError("Newton inversion did not converge for " + msg.str());
}

std::array<double, 2> invert_values(const EosModel& m, Chart chart, double c1, double c2,
                                    const Tolerances& tol) {
  const DomainBox& box = m.domain();
  switch (chart) {
    case Chart::SV:
      return {c1, c2};
    case Chart::TV: {
      const double v = c2;
      if (v < box.v_lo || v > box.v_hi) throw BracketError("V outside the domain box");
      const double s = solve_monotone(
          [&](double x) {
            return std::make_pair(m.temperature(x, v), m.gradient(Quantity::T, x, v)[0]);
          },
          c1, box.s_lo, box.s_hi, tol, "T");
      return {s, v};
    }
    case Chart::SP: {
      const double s = c1;
      if (s < box.s_lo || s > box.s_hi) throw BracketError("S outside the domain box");
      const double v = solve_monotone(
          [&](double x) {
            return std::make_pair(m.pressure(s, x), m.gradient(Quantity::P, s, x)[1]);
          },
          c2, box.v_lo, box.v_hi, tol, "P");
      return {s, v};
    }
    case Chart::TP:
      return invert_tp(m, c1, c2, tol);
  }
  throw DomainError("invalid chart");
}

}  // namespace

DomainBox DomainBox::make(double s_lo, double s_hi, double v_lo, double v_hi) {
  for (double x : {s_lo, s_hi, v_lo, v_hi}) {
    if (!std::isfinite(x)) throw DomainError("domain box bounds must be finite");
  }
  if (!(s_lo < s_hi) || !(v_lo < v_hi)) throw DomainError("domain box must be non-empty");
  if (!(v_lo > 0)) throw DomainError("domain box volume range must be strictly positive");
  return {s_lo, s_hi, v_lo, v_hi};
}

EosModel::EosModel(std::string name, std::map<std::string, double> parameters, DomainBox domain,
                   std::shared_ptr<const detail::EosImpl> impl, bool has_analytic_derivatives)
    : name_(std::move(name)),
      parameters_(std::move(parameters)),
      domain_(domain),
      impl_(std::move(impl)),
      analytic_(has_analytic_derivatives) {}

EosModel EosModel::with_domain(const DomainBox& box) const {
  EosModel copy = *this;
  copy.domain_ = box;
  return copy;
}

std::array<double, 2> EosModel::gradient(Quantity q, double s, double v) const {
  switch (q) {
    case Quantity::S: return {1.0, 0.0};
    case Quantity::V: return {0.0, 1.0};
    default: break;
  }
  if (analytic_) {
    if (q == Quantity::U) return {temperature(s, v), -pressure(s, v)};
    const SecondPartials h = second_partials(s, v);
    if (q == Quantity::T) return {h.t_s, h.t_v};
    return {h.p_s, h.p_v};
  }
  const Dual ds = quantity(q, Dual::variable(s), Dual(v));
  const Dual dv = quantity(q, Dual(s), Dual::variable(v));
  return {ds.d, dv.d};
}

EosModel ideal_gas() { return ideal_gas(default_ideal_box()); }

EosModel ideal_gas(const DomainBox& box) {
  return EosModel("ideal_gas", {}, box, std::make_shared<ModelAdaptor<IdealGasLaw>>(IdealGasLaw{}));
}

EosModel van_der_waals(double a, double b) {
  return van_der_waals(a, b, DomainBox::make(-1.0, 3.0, std::max(1.0, 10.0 * b), 50.0));
}

EosModel van_der_waals(double a, double b, const DomainBox& box) {
  if (!(a >= 0) || !(b >= 0)) throw DomainError("van der Waals parameters must be non-negative");
  if (!(box.v_lo > b)) throw DomainError("van der Waals domain requires V > b");
  EosModel m("van_der_waals", {{"a", a}, {"b", b}}, box,
             std::make_shared<ModelAdaptor<VanDerWaalsLaw>>(VanDerWaalsLaw{a, b}));
  check_single_phase(m);
  return m;
}

EosModel corrupted(const EosModel& base) {
  auto params = base.parameters();
  params["corrupted"] = 1.0;
  return EosModel(base.name() + "+corrupted", std::move(params), base.domain(),
                  std::make_shared<CorruptedImpl>(base), base.has_analytic_derivatives());
}

StateValues evaluate(const EosModel& model, const StatePoint& pt) {
  if (pt.chart() != Chart::SV) throw DomainError("evaluate expects an SV point");
  const double s = pt.c1();
  const double v = pt.c2();
  if (!model.domain().contains(s, v)) {
    std::ostringstream msg;
    msg << "(S,V) = (" << s << ", " << v << ") lies outside the domain of " << model.name();
    throw DomainError(msg.str());
  }
  const StateValues out{model.energy(s, v), model.temperature(s, v), model.pressure(s, v)};
  if (!(out.t > 0) || !(out.p > 0)) {
    throw DomainError("non-positive temperature or pressure at the requested point");
  }
  return out;
}

StatePoint to_chart(const EosModel& model, const StatePoint& sv, Chart target) {
  if (sv.chart() != Chart::SV) throw DomainError("to_chart expects an SV point");
  auto [q1, q2] = axes(target);
  return StatePoint::make(target, model.quantity(q1, sv.c1(), sv.c2()),
                          model.quantity(q2, sv.c1(), sv.c2()));
}

StatePoint invert_to_chart(const EosModel& model, const StatePoint& target, const Tolerances& tol) {
  const auto sv = invert_values(model, target.chart(), target.c1(), target.c2(), tol);
  if (!model.domain().contains(sv[0], sv[1])) {
    throw BracketError("chart coordinates map outside the domain box");
  }
  return StatePoint::sv(sv[0], sv[1]);
}

std::array<Dual, 2> invert_to_chart(const EosModel& model, Chart chart, Dual c1, Dual c2,
                                    const Tolerances& tol) {
  if (chart == Chart::SV) return {c1, c2};
  const auto sv = invert_values(model, chart, c1.v, c2.v, tol);
  const auto j = chart_jacobian(model, chart, sv[0], sv[1]);
  const auto d = solve2(j, c1.d, c2.d);
  return {Dual(sv[0], d[0]), Dual(sv[1], d[1])};
}

double volume_at(const EosModel& model, double s, double t, const Tolerances& tol) {
  const DomainBox& box = model.domain();
  if (s < box.s_lo || s > box.s_hi) throw BracketError("S outside the domain box");
  return solve_monotone(
      [&](double x) {
        return std::make_pair(model.temperature(s, x), model.gradient(Quantity::T, s, x)[1]);
      },
      t, box.v_lo, box.v_hi, tol, "T");
}

}  // namespace thermoform
