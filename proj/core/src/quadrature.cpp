#include "thermoform/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "thermoform/core.hpp"

namespace thermoform {

namespace {

struct Piece {
  double a;
  double b;
  double value;
  double error;
  double l1;

  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece rule(const std::function<double(double)>& f, double a, double b) {
  using gk15 = boost::math::quadrature::gauss_kronrod<double, 15>;
  double err = 0.0;
  double l1 = 0.0;
  const double value = gk15::integrate(f, a, b, 0, 0.0, &err, &l1);
  if (!std::isfinite(value)) {
    std::ostringstream msg;
    msg << "non-finite integrand on [" << a << ", " << b << "]";
    throw QuadratureError(msg.str());
  }
  return {a, b, value, err, l1};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_intervals) {
  return integrate(f, a, b, {}, abs_tol, max_intervals);
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breaks, double abs_tol, int max_intervals) {
  if (a == b) return {};
  std::vector<double> knots{a};
  for (double x : breaks) {
    if (x > knots.back() && x < b) knots.push_back(x);
  }
  knots.push_back(b);

  std::priority_queue<Piece> queue;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    Piece p = rule(f, knots[i], knots[i + 1]);
    total_err += p.error;
    queue.push(p);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  auto l1_total = [&queue]() {
    double l1 = 0.0;
    for (auto copy = queue; !copy.empty(); copy.pop()) l1 += copy.top().l1;
    return l1;
  };

  while (total_err > abs_tol) {
    if (static_cast<int>(queue.size()) >= max_intervals) {
      if (total_err <= 100.0 * eps * l1_total()) break;
      std::ostringstream msg;
      msg << "quadrature did not reach " << abs_tol << " (estimate " << total_err << ") within "
          << max_intervals << " intervals";
      throw QuadratureError(msg.str());
    }
    Piece worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval cannot be split further in double precision.
      queue.push(worst);
      if (total_err <= 100.0 * eps * l1_total()) break;
      throw QuadratureError("quadrature interval underflow");
    }
    Piece left = rule(f, worst.a, mid);
    Piece right = rule(f, mid, worst.b);
    total_err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  QuadratureResult out;
  out.intervals = static_cast<int>(queue.size());
  // Sum in interval order so the result does not depend on heap layout.
  std::vector<Piece> pieces;
  pieces.reserve(queue.size());
  for (; !queue.empty(); queue.pop()) pieces.push_back(queue.top());
  std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.a < y.a; });
  for (const Piece& p : pieces) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

}  // namespace thermoform
