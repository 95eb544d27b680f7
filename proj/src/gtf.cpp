#include "gentrig/gtf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gentrig/detail/series.hpp"
#include "gentrig/errors.hpp"
#include "gentrig/quad.hpp"

namespace gentrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kResidualTol = 1e-13;   // |F(y) - x| <= kResidualTol*(1+x)
constexpr double kBracketTol = 1e-16;
constexpr int kMaxIter = 200;

struct Inverted {
  double y;
  double y_minus_x;
  double err;         // on the value
  double err_offset;  // on y - x, which the series path carries exactly
};

Inverted invert_F(const ParamPair& pair, double x) {
  const double p = pair.p();
  const double q = pair.q();

  // Series fast path: below the crossover the three-term reversion is more
  // accurate than a measured Newton solve, and its remainder bound gives the
  // error estimate directly.
  const auto series = detail::inverse_series(p, q);
  if (std::pow(x, q) <= 0.05) {
    const double bound = series.remainder_bound(x, q);
    if (bound <= 2e-15 * (1.0 + x)) {
      const double d = series.offset(x, q, -1.0);
      const double y = x + d;
      return {y, d, bound + 0.5 * kEps * y, bound + kEps * std::fabs(d)};
    }
  }

  const double tol_res = kResidualTol * (1.0 + x);
  const double quad_tol = std::max(0.25 * tol_res, 1e-15);
  double lo = 0.0;
  double hi = 1.0 - 1e-16;

  const HalfPeriod hp = half_period(pair);
  const bool series_guess = hp.is_finite() ? x < 0.5 * hp.value() : x <= 1.0;
  double y = series_guess
                 ? std::clamp(x + series.offset(x, q, -1.0), 0.0, hi)
                 : 0.5 * (lo + hi);
  if (y <= lo || y >= hi) y = 0.5 * (lo + hi);

  double resid = 0.0;
  double quad_err = 0.0;
  double slope = 1.0;  // dy/dx = (1 - y^q)^(1/p)
  double step1 = std::numeric_limits<double>::infinity();
  double step2 = std::numeric_limits<double>::infinity();
  for (int iter = 0;; ++iter) {
    if (iter >= kMaxIter)
      throw ConvergenceError("sin_{p,q}: safeguarded Newton did not converge");
    const QuadResult F = integral_F(pair, y, quad_tol);
    resid = F.value - x;
    quad_err = F.err_est;
    slope = std::pow(detail::one_minus_pow(y, q), 1.0 / p);
    if (std::fabs(resid) <= tol_res) break;
    if (resid < 0.0)
      lo = y;
    else
      hi = y;
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= kBracketTol || mid <= lo || mid >= hi) {
      y = std::clamp(mid, lo, hi);
      break;
    }
    // Fall back to bisection when the Newton step leaves the bracket or
    // stops halving (stagnation on the flat side of a steep residual).
    double delta = resid * slope;
    double next = y - delta;
    if (!(next > lo) || !(next < hi) || std::fabs(2.0 * delta) > step2) {
      next = mid;
      delta = y - mid;
    }
    step2 = step1;
    step1 = std::fabs(delta);
    y = next;
  }
  const double err =
      (std::fabs(resid) + quad_err) * slope + 0.5 * kEps * y;
  return {y, y - x, err, err};
}

}  // namespace

TrigValues trig_values(const ParamPair& pair, double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw DomainError("argument must be finite and nonnegative");
  if (x >= half_period(pair).upper_bound())
    throw DomainError("argument at or beyond the branch endpoint pi_{p,q}/2");

  const double p = pair.p();
  const double q = pair.q();
  if (x == 0.0)
    return {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
            0.0, 0.0, 0.0, 1.0};

  const Inverted inv = invert_F(pair, x);
  const double s = inv.y;
  const double es = inv.err;
  const double spq = std::pow(s, q);
  const double omp = detail::one_minus_pow(s, q);

  const double c = std::pow(omp, 1.0 / p);
  const double dc = (q / p) * std::pow(s, q - 1.0) * std::pow(omp, 1.0 / p - 1.0);
  const double ec = dc * es + kEps * c;

  const double tam = s * std::pow(omp, -1.0 / q);
  const double dtam = std::pow(omp, -1.0 / q - 1.0);
  const double etam = dtam * es + kEps * std::fabs(tam);

  const double tan_v = s * std::pow(omp, -1.0 / p);
  const double dtan =
      std::pow(omp, -1.0 / p - 1.0) * std::fabs(1.0 - spq * (1.0 - q / p));
  const double etan = dtan * es + kEps * std::fabs(tan_v);

  return {{s, es},       {c, ec}, {tam, etam},    {tan_v, etan},
          inv.y_minus_x, inv.err_offset, spq, omp};
}

FnValue sin_pq(const ParamPair& pair, double x) {
  return trig_values(pair, x).sin;
}

FnValue cos_pq(const ParamPair& pair, double x) {
  return trig_values(pair, x).cos;
}

FnValue tam_pq(const ParamPair& pair, double x) {
  const FnValue v = trig_values(pair, x).tam;
  if (!std::isfinite(v.value))
    throw OverflowSignal("tam_{p,q}: cos underflowed to zero");
  return v;
}

FnValue tan_pq(const ParamPair& pair, double x) {
  const FnValue v = trig_values(pair, x).tan;
  if (!std::isfinite(v.value))
    throw OverflowSignal("tan_{p,q}: cos underflowed to zero");
  return v;
}

FnValue asin_pq(const ParamPair& pair, double y) {
  if (!std::isfinite(y) || y < 0.0 || y >= 1.0)
    throw DomainError("asin_{p,q} requires y in [0, 1)");
  const QuadResult r = integral_F(pair, y);
  return {r.value, r.err_est};
}

}  // namespace gentrig
