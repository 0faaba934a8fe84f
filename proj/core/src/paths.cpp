#include "thermoform/paths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "thermoform/quadrature.hpp"

namespace thermoform {

namespace {

constexpr double kClosedTol = 1e-14;

// sin(k pi t) that is exactly zero at t = 0 and t = 1.
double sin_mode(int k, double t) {
  if (t <= 0.5) return std::sin(k * std::numbers::pi * t);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return sign * std::sin(k * std::numbers::pi * (1.0 - t));
}

double cos_mode(int k, double t) { return std::cos(k * std::numbers::pi * t); }

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t attempt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(attempt)};
    engine_.seed(seq);
  }
  // Uniform on [0, 1) with 53 random bits; independent of the standard
  // library's distribution implementations.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

// Bernstein polynomial of degree 4 with non-decreasing coefficients
// c0 = 0 <= c1 <= ... <= c4 = 1; a monotone map of [0, 1] onto itself.
struct MonotoneMap {
  std::array<double, 5> c;

  double operator()(double t) const {
    const double u = 1.0 - t;
    return c[1] * 4 * t * u * u * u + c[2] * 6 * t * t * u * u + c[3] * 4 * t * t * t * u +
           c[4] * t * t * t * t;
  }
  double derivative(double t) const {
    const double u = 1.0 - t;
    return 4.0 * ((c[1] - c[0]) * u * u * u + (c[2] - c[1]) * 3 * t * u * u +
                  (c[3] - c[2]) * 3 * t * t * u + (c[4] - c[3]) * t * t * t);
  }
};

MonotoneMap random_monotone_map(Rng& rng) {
  std::array<double, 3> inner{rng.uniform(), rng.uniform(), rng.uniform()};
  std::sort(inner.begin(), inner.end());
  return {{0.0, inner[0], inner[1], inner[2], 1.0}};
}

double gk_integral(const std::function<double(double)>& f, const std::vector<double>& breaks,
                   double abs_tol) {
  return integrate(f, 0.0, 1.0, breaks, abs_tol).value;
}

}  // namespace

Path::Path(Fn s, Fn v, Fn ds, Fn dv, std::vector<double> breaks)
    : s_(std::move(s)), v_(std::move(v)), ds_(std::move(ds)), dv_(std::move(dv)),
      breaks_(std::move(breaks)) {
  std::sort(breaks_.begin(), breaks_.end());
  breaks_.erase(std::remove_if(breaks_.begin(), breaks_.end(),
                               [](double b) { return !(b > 0.0 && b < 1.0); }),
                breaks_.end());
  breaks_.erase(std::unique(breaks_.begin(), breaks_.end()), breaks_.end());
}

Path Path::segment(const StatePoint& from, const StatePoint& to) {
  if (from.chart() != Chart::SV || to.chart() != Chart::SV) {
    throw DomainError("paths live on the SV chart");
  }
  const double s0 = from.c1(), v0 = from.c2(), s1 = to.c1(), v1 = to.c2();
  return Path([=](double t) { return std::lerp(s0, s1, t); },
              [=](double t) { return std::lerp(v0, v1, t); }, [=](double) { return s1 - s0; },
              [=](double) { return v1 - v0; });
}

Path Path::constant(const StatePoint& at) { return segment(at, at); }

Path Path::polyline(const std::vector<StatePoint>& vertices) {
  if (vertices.size() < 2) throw DomainError("polyline needs at least two vertices");
  std::vector<Path> pieces;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    pieces.push_back(segment(vertices[i], vertices[i + 1]));
  }
  return concat(pieces);
}

Path Path::rectangle_loop(double s_lo, double s_hi, double v_lo, double v_hi) {
  return polyline({StatePoint::sv(s_lo, v_lo), StatePoint::sv(s_hi, v_lo),
                   StatePoint::sv(s_hi, v_hi), StatePoint::sv(s_lo, v_hi),
                   StatePoint::sv(s_lo, v_lo)});
}

Path Path::concat(const std::vector<Path>& pieces) {
  if (pieces.empty()) throw DomainError("cannot concatenate zero paths");
  if (pieces.size() == 1) return pieces.front();
  const auto n = static_cast<int>(pieces.size());
  auto locate = [n](double t) {
    const int i = std::clamp(static_cast<int>(std::floor(t * n)), 0, n - 1);
    return std::make_pair(i, t * n - i);
  };
  std::vector<double> breaks;
  for (int i = 0; i < n; ++i) {
    if (i > 0) breaks.push_back(static_cast<double>(i) / n);
    for (double b : pieces[i].breaks()) breaks.push_back((i + b) / n);
  }
  return Path(
      [pieces, locate](double t) {
        auto [i, u] = locate(t);
        return pieces[i].s(u);
      },
      [pieces, locate](double t) {
        auto [i, u] = locate(t);
        return pieces[i].v(u);
      },
      [pieces, locate, n](double t) {
        auto [i, u] = locate(t);
        return n * pieces[i].ds(u);
      },
      [pieces, locate, n](double t) {
        auto [i, u] = locate(t);
        return n * pieces[i].dv(u);
      },
      std::move(breaks));
}

StatePoint Path::start() const { return StatePoint::sv(s_(0.0), v_(0.0)); }
StatePoint Path::end() const { return StatePoint::sv(s_(1.0), v_(1.0)); }

bool Path::closed() const {
  return std::abs(s_(1.0) - s_(0.0)) <= kClosedTol && std::abs(v_(1.0) - v_(0.0)) <= kClosedTol;
}

Path Path::reversed() const {
  std::vector<double> breaks;
  for (double b : breaks_) breaks.push_back(1.0 - b);
  return Path([f = s_](double t) { return f(1.0 - t); }, [f = v_](double t) { return f(1.0 - t); },
              [f = ds_](double t) { return -f(1.0 - t); },
              [f = dv_](double t) { return -f(1.0 - t); }, std::move(breaks));
}

Path Path::restricted(double t0, double t1) const {
  if (!(t0 >= 0.0 && t1 <= 1.0 && t0 < t1)) throw DomainError("invalid restriction interval");
  const double w = t1 - t0;
  std::vector<double> breaks;
  for (double b : breaks_) {
    if (b > t0 && b < t1) breaks.push_back((b - t0) / w);
  }
  return Path([f = s_, t0, t1](double u) { return f(std::lerp(t0, t1, u)); },
              [f = v_, t0, t1](double u) { return f(std::lerp(t0, t1, u)); },
              [f = ds_, t0, t1, w](double u) { return w * f(std::lerp(t0, t1, u)); },
              [f = dv_, t0, t1, w](double u) { return w * f(std::lerp(t0, t1, u)); },
              std::move(breaks));
}

Path Path::perturbed(const std::vector<double>& s_amplitudes,
                     const std::vector<double>& v_amplitudes) const {
  auto bump = [](const std::vector<double>& amp, double t) {
    double x = 0.0;
    for (std::size_t k = 0; k < amp.size(); ++k) x += amp[k] * sin_mode(static_cast<int>(k) + 1, t);
    return x;
  };
  auto dbump = [](const std::vector<double>& amp, double t) {
    double x = 0.0;
    for (std::size_t k = 0; k < amp.size(); ++k) {
      const int m = static_cast<int>(k) + 1;
      x += amp[k] * m * std::numbers::pi * cos_mode(m, t);
    }
    return x;
  };
  return Path([f = s_, a = s_amplitudes, bump](double t) { return f(t) + bump(a, t); },
              [f = v_, a = v_amplitudes, bump](double t) { return f(t) + bump(a, t); },
              [f = ds_, a = s_amplitudes, dbump](double t) { return f(t) + dbump(a, t); },
              [f = dv_, a = v_amplitudes, dbump](double t) { return f(t) + dbump(a, t); },
              breaks_);
}

bool Path::within(const DomainBox& box, int samples) const {
  auto inside = [&](double t) { return box.contains(s_(t), v_(t)); };
  for (int i = 0; i <= samples; ++i) {
    if (!inside(static_cast<double>(i) / samples)) return false;
  }
  return std::all_of(breaks_.begin(), breaks_.end(), inside);
}

Region Region::rectangle(double s_lo, double s_hi, double v_lo, double v_hi) {
  if (!(s_lo < s_hi) || !(v_lo < v_hi)) throw DomainError("rectangle must have positive area");
  Region r;
  r.rect_ = {s_lo, s_hi, v_lo, v_hi};
  r.area_ = (s_hi - s_lo) * (v_hi - v_lo);
  return r;
}

Region Region::bounded_by(const Path& loop, const Tolerances& tol) {
  if (!loop.closed()) throw DomainError("region boundary must be a closed path");
  const double area = enclosed_area(loop, tol);
  if (!(area > 0.0)) {
    throw DomainError("region boundary must be traversed counterclockwise with positive area");
  }
  Region r;
  r.loop_ = loop;
  r.area_ = area;
  return r;
}

Path Region::boundary() const {
  if (loop_) return *loop_;
  return Path::rectangle_loop(rect_[0], rect_[1], rect_[2], rect_[3]);
}

std::string_view to_string(PathGenerator g) {
  switch (g) {
    case PathGenerator::straight_line: return "straight_line";
    case PathGenerator::monotone_spline: return "monotone_spline";
    case PathGenerator::fourier_perturbed: return "fourier_perturbed";
  }
  return "?";
}

PathGenerator path_generator_from_string(std::string_view name) {
  for (auto g : {PathGenerator::straight_line, PathGenerator::monotone_spline,
                 PathGenerator::fourier_perturbed}) {
    if (to_string(g) == name) return g;
  }
  throw DomainError("unknown path generator '" + std::string(name) + "'");
}

std::array<std::vector<double>, 2> fourier_coefficients(std::uint64_t seed, int index,
                                                        double amplitude, int attempt) {
  Rng rng(seed, static_cast<std::uint64_t>(index), static_cast<std::uint64_t>(attempt));
  std::array<std::vector<double>, 2> out;
  for (auto& coeffs : out) {
    coeffs.resize(kFourierModes);
    for (int k = 0; k < kFourierModes; ++k) coeffs[k] = amplitude * rng.uniform(-1.0, 1.0) / (k + 1);
  }
  return out;
}

std::vector<Path> generate_paths(const PathFamily& family, const StatePoint& from,
                                 const StatePoint& to, const DomainBox& box) {
  if (family.count < 1) throw DomainError("path family count must be at least 1");
  if (!box.contains(from.c1(), from.c2()) || !box.contains(to.c1(), to.c2())) {
    throw DomainError("path endpoints must lie inside the domain box");
  }
  const double s0 = from.c1(), v0 = from.c2(), s1 = to.c1(), v1 = to.c2();
  const Path line = Path::segment(from, to);
  std::vector<Path> out;
  out.reserve(family.count);

  for (int i = 0; i < family.count; ++i) {
    switch (family.generator) {
      case PathGenerator::straight_line: {
        // Monotone reparametrizations t + alpha t (1 - t) of the segment.
        Rng rng(family.seed, static_cast<std::uint64_t>(i), 0);
        const double alpha = i == 0 ? 0.0 : rng.uniform(-0.9, 0.9);
        auto phi = [alpha](double t) { return t + alpha * t * (1.0 - t); };
        auto dphi = [alpha](double t) { return 1.0 + alpha * (1.0 - 2.0 * t); };
        out.emplace_back([=](double t) { return std::lerp(s0, s1, phi(t)); },
                         [=](double t) { return std::lerp(v0, v1, phi(t)); },
                         [=](double t) { return (s1 - s0) * dphi(t); },
                         [=](double t) { return (v1 - v0) * dphi(t); });
        break;
      }
      case PathGenerator::monotone_spline: {
        Rng rng(family.seed, static_cast<std::uint64_t>(i), 0);
        const MonotoneMap ms = random_monotone_map(rng);
        const MonotoneMap mv = random_monotone_map(rng);
        out.emplace_back([=](double t) { return std::lerp(s0, s1, ms(t)); },
                         [=](double t) { return std::lerp(v0, v1, mv(t)); },
                         [=](double t) { return (s1 - s0) * ms.derivative(t); },
                         [=](double t) { return (v1 - v0) * mv.derivative(t); });
        break;
      }
      case PathGenerator::fourier_perturbed: {
        constexpr int kMaxAttempts = 100;
        bool placed = false;
        for (int attempt = 0; attempt < kMaxAttempts && !placed; ++attempt) {
          auto coeffs = fourier_coefficients(family.seed, i, family.amplitude, attempt);
          Path p = line.perturbed(coeffs[0], coeffs[1]);
          if (p.within(box)) {
            out.push_back(std::move(p));
            placed = true;
          }
        }
        if (!placed) {
          std::ostringstream msg;
          msg << "fourier_perturbed path " << i << " leaves the domain box after " << kMaxAttempts
              << " draws; reduce the amplitude";
          throw DomainError(msg.str());
        }
        break;
      }
    }
  }
  return out;
}

double line_integral(const OneForm& form, const Path& path, const Tolerances& tol) {
  if (form.chart != Chart::SV) throw DomainError("line integrals are taken on the SV chart");
  auto integrand = [&](double t) {
    const double ds = path.ds(t);
    const double dv = path.dv(t);
    const double s = path.s(t);
    const double v = path.v(t);
    double out = 0.0;
    if (ds != 0.0) out += form.comp1(s, v) * ds;
    if (dv != 0.0) out += form.comp2(s, v) * dv;
    return out;
  };
  return gk_integral(integrand, path.breaks(), tol.quad_abs());
}

double line_integral(const OneForm& form, const Path& path, const DomainBox& box,
                     const Tolerances& tol) {
  if (!path.within(box)) throw DomainError("path leaves the domain box");
  return line_integral(form, path, tol);
}

double loop_integral(const OneForm& form, const Path& loop, const Tolerances& tol) {
  if (!loop.closed()) throw DomainError("loop_integral requires a closed path");
  return line_integral(form, loop, tol);
}

double region_integral(const TwoForm& form, const Region& region, const Tolerances& tol) {
  if (form.chart != Chart::SV) throw DomainError("region integrals are taken on the SV chart");
  const double target = tol.quad_abs();
  if (region.is_rectangle()) {
    const auto [s_lo, s_hi, v_lo, v_hi] = region.bounds();
    const double inner_tol = 0.5 * target / (s_hi - s_lo);
    auto outer = [&](double s) {
      return integrate([&](double v) { return form(s, v); }, v_lo, v_hi, inner_tol).value;
    };
    return integrate(outer, s_lo, s_hi, 0.5 * target).value;
  }

  // Star-shaped region: (t, r) -> c + r (gamma(t) - c), Jacobian r (gamma - c) x gamma'.
  const Path loop = region.boundary();
  constexpr int n = 64;
  double cs = 0.0, cv = 0.0;
  for (int i = 0; i < n; ++i) {
    cs += loop.s(static_cast<double>(i) / n);
    cv += loop.v(static_cast<double>(i) / n);
  }
  cs /= n;
  cv /= n;
  auto outer = [&](double t) {
    const double ds = loop.s(t) - cs;
    const double dv = loop.v(t) - cv;
    const double cross = ds * loop.dv(t) - dv * loop.ds(t);
    if (cross == 0.0) return 0.0;
    auto inner = [&](double r) { return r * form(cs + r * ds, cv + r * dv); };
    return cross * integrate(inner, 0.0, 1.0, 0.25 * target / std::max(1.0, std::abs(cross))).value;
  };
  return gk_integral(outer, loop.breaks(), 0.5 * target);
}

double enclosed_area(const Path& loop, const Tolerances& tol) {
  if (!loop.closed()) throw DomainError("enclosed_area requires a closed path");
  return gk_integral([&](double t) { return loop.s(t) * loop.dv(t); }, loop.breaks(),
                     tol.quad_abs());
}

std::vector<double> turning_points(const Path& path, int axis, int samples) {
  auto d = [&](double t) { return axis == 0 ? path.ds(t) : path.dv(t); };
  std::vector<double> out;
  double t_prev = 0.0;
  double d_prev = d(0.0);
  for (int i = 1; i <= samples; ++i) {
    const double t = static_cast<double>(i) / samples;
    const double d_cur = d(t);
    if ((d_prev < 0 && d_cur > 0) || (d_prev > 0 && d_cur < 0)) {
      double lo = t_prev, hi = t;
      double f_lo = d_prev;
      for (int it = 0; it < 60 && hi - lo > 1e-14; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = d(mid);
        if ((f_mid > 0) == (f_lo > 0)) {
          lo = mid;
          f_lo = f_mid;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    if (d_cur != 0.0) {
      t_prev = t;
      d_prev = d_cur;
    }
  }
  return out;
}

}  // namespace thermoform
