#include "gentrig/quad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <vector>

#include "gentrig/detail/series.hpp"
#include "gentrig/errors.hpp"

namespace gentrig {

namespace detail {

double one_minus_pow(double t, double q) {
  if (t <= 0.0) return 1.0;
  if (t >= 1.0) return 0.0;
  return -std::expm1(q * std::log(t));
}

double InverseSeries::offset(double x, double q, double sign) const {
  const double xq1 = std::pow(x, q + 1.0);
  return sign * a1 * xq1 + b2 * xq1 * std::pow(x, q);
}

double InverseSeries::remainder_bound(double x, double q) const {
  return k3 * std::pow(x, 3.0 * q + 1.0);
}

InverseSeries inverse_series(double p, double q) {
  // Reversion of x = y + s*a1*y^(q+1) + a2*y^(2q+1) + a3*y^(3q+1) + ...,
  // the expansion of the defining integrals around 0.
  const double a1 = 1.0 / (p * (q + 1.0));
  const double a2 = (1.0 + p) / (2.0 * p * p * (2.0 * q + 1.0));
  const double g3 = (1.0 / p) * (1.0 / p + 1.0) * (1.0 / p + 2.0) / 6.0;
  const double a3 = g3 / (3.0 * q + 1.0);
  const double b2 = (q + 1.0) * a1 * a1 - a2;
  const double b3 = a1 * a2 * (2.0 * q + 1.0) - a1 * (q + 1.0) * b2 -
                    0.5 * q * (q + 1.0) * a1 * a1 * a1 - a3;
  const double k3 = 4.0 * (std::fabs(b3) + (q + 1.0) * a1 * std::fabs(b2) +
                           (q + 1.0) * (q + 1.0) * a1 * a1 * a1 +
                           a1 * a2 * (2.0 * q + 1.0) + a3);
  return InverseSeries{a1, b2, k3};
}

}  // namespace detail

namespace {

constexpr int kMaxLevel = 12;

struct Node {
  double delta;  // 1 - |abscissa| on the reference interval (-1, 1)
  double weight;
};

// Nodes introduced at each halving level of the tanh-sinh rule, abscissae
// t = k*h with k odd past level 0.  Built once, shared read-only.
const std::vector<std::vector<Node>>& node_tables() {
  static const std::vector<std::vector<Node>> tables = [] {
    std::vector<std::vector<Node>> levels(kMaxLevel + 1);
    const double half_pi = std::numbers::pi / 2.0;
    const double tiny = std::numeric_limits<double>::min();
    for (int level = 0; level <= kMaxLevel; ++level) {
      const double h = std::ldexp(1.0, -level);
      const int step = level == 0 ? 1 : 2;
      for (int k = level == 0 ? 0 : 1;; k += step) {
        const double u = half_pi * std::sinh(k * h);
        const double delta = 2.0 / (1.0 + std::exp(2.0 * u));
        if (delta < tiny) break;
        const double weight = half_pi * std::cosh(k * h) * delta * (2.0 - delta);
        levels[level].push_back(Node{delta, weight});
      }
    }
    return levels;
  }();
  return tables;
}

}  // namespace

double default_tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("GENTRIG_TOL")) {
      char* end = nullptr;
      const double v = std::strtod(env, &end);
      if (end != env && std::isfinite(v) && v > 0.0)
        return std::clamp(v, 1e-15, 1e-3);
    }
    return 1e-13;
  }();
  return tol;
}

QuadResult integrate_singular(const OffsetIntegrand& f, double a, double b,
                              double tol) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw DomainError("quadrature endpoints must be finite");
  if (!(a < b)) {
    if (a == b) return {0.0, 0.0};
    throw DomainError("quadrature requires a < b");
  }
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");

  const double scale = 0.5 * (b - a);
  const double width = b - a;
  const auto& levels = node_tables();

  // Weighted sum over every node seen so far; coarser-level nodes sit at
  // even multiples of the current spacing, so one running sum serves every
  // refinement stage.  Non-finite integrand values (exact endpoint hits of
  // a singular factor) are dropped; their weights are double-exponentially
  // small.
  auto add_pair = [&](const Node& n, double& sum) {
    const double off = scale * n.delta;
    const double vl = f(a + off, off, width - off);
    if (std::isfinite(vl)) sum += n.weight * vl;
    const double vr = f(b - off, width - off, off);
    if (std::isfinite(vr)) sum += n.weight * vr;
  };

  double sum = 0.0;
  {
    const Node& center = levels[0][0];  // delta = 1: the midpoint, once
    const double v = f(a + scale, scale, scale);
    if (std::isfinite(v)) sum += center.weight * v;
    for (std::size_t i = 1; i < levels[0].size(); ++i)
      add_pair(levels[0][i], sum);
  }
  double h = 1.0;
  double integral = scale * h * sum;
  double err = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    for (const Node& n : levels[level]) add_pair(n, sum);
    const double refined = scale * h * sum;
    err = std::fabs(refined - integral);
    integral = refined;
    const double goal = std::max(tol, tol * std::fabs(integral));
    if (level >= 3 && err <= goal) return {integral, err};
  }
  throw ConvergenceError(
      "tanh-sinh quadrature exhausted its refinement budget before reaching "
      "tolerance");
}

QuadResult integrate_singular(const std::function<double(double)>& f, double a,
                              double b, double tol) {
  return integrate_singular(
      [&f](double x, double, double) { return f(x); }, a, b, tol);
}

QuadResult integral_F(const ParamPair& pair, double y, double tol) {
  if (!std::isfinite(y) || y < 0.0 || y >= 1.0)
    throw DomainError("integral_F requires y in [0, 1)");
  if (y == 0.0) return {0.0, 0.0};
  const double p = pair.p();
  const double q = pair.q();

  if (p > 1.0 && y > 1.0 - 1e-8) {
    // Evaluate as half-period minus the tail over (y, 1).  With u = 1 - t
    // the singularity sits at u = 0 with exponent 1/p, which approaches a
    // non-integrable strength as p -> 1; the further substitution u = w*v^m
    // with m = p/(p-1) flattens it to a finite limit at v = 0 for every
    // admissible p.
    const double hp = half_period(pair).value();
    const double w = 1.0 - y;  // exact
    const double m = p / (p - 1.0);
    const double ln_w = std::log(w);
    const double ln_m = std::log(m);
    auto g = [p, q, w, m, ln_w, ln_m](double v, double, double to_b) {
      const double ln_v = v < 0.5 ? std::log(v) : std::log1p(-to_b);
      const double ln_u = ln_w + m * ln_v;
      if (ln_u < -18.5) {
        // u below ~1e-8: log-space form of ln(1 - (1-u)^q)
        const double u = std::exp(ln_u);
        const double ln_t =
            std::log(q) + ln_u + std::log1p(-0.5 * (q - 1.0) * u);
        return std::exp(ln_m + ln_w + (m - 1.0) * ln_v - ln_t / p);
      }
      const double u = w * std::exp(m * ln_v);
      const double core = std::pow(-std::expm1(q * std::log1p(-u)), -1.0 / p);
      return m * w * std::exp((m - 1.0) * ln_v) * core;
    };
    const QuadResult tail = integrate_singular(g, 0.0, 1.0, tol);
    const double eps = std::numeric_limits<double>::epsilon();
    return {hp - tail.value, tail.err_est + eps * hp};
  }

  // 1 - t = (1 - y) + (y - t), both pieces exact, so the integrand keeps
  // full precision when y sits close to the singularity at 1.
  const double one_minus_y = 1.0 - y;
  auto f = [p, q, one_minus_y](double, double, double to_b) {
    const double one_minus_t = one_minus_y + to_b;
    return std::pow(-std::expm1(q * std::log1p(-one_minus_t)), -1.0 / p);
  };
  return integrate_singular(f, 0.0, y, tol);
}

QuadResult integral_G(const ParamPair& pair, double y, double tol) {
  if (!std::isfinite(y) || y < 0.0)
    throw DomainError("integral_G requires finite y >= 0");
  if (y == 0.0) return {0.0, 0.0};
  const double p = pair.p();
  const double q = pair.q();

  auto f = [p, q](double t, double, double) {
    return std::pow(1.0 + std::pow(t, q), -1.0 / p);
  };
  if (y <= 1.0) return integrate_singular(f, 0.0, y, tol);

  // Split at t = 1 and map the tail through t = 1/s to keep the node spread
  // bounded for large y.
  auto g = [p, q](double s, double, double) {
    return std::pow(s, q / p - 2.0) * std::pow(1.0 + std::pow(s, q), -1.0 / p);
  };
  const QuadResult head = integrate_singular(f, 0.0, 1.0, 0.5 * tol);
  const QuadResult tail = integrate_singular(g, 1.0 / y, 1.0, 0.5 * tol);
  return {head.value + tail.value, head.err_est + tail.err_est};
}

}  // namespace gentrig
