#include "gentrig/ghf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gentrig/detail/series.hpp"
#include "gentrig/errors.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/quad.hpp"

namespace gentrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kResidualTol = 1e-13;
constexpr int kMaxIter = 200;
constexpr double kOverflowCap = 1e12;

struct Inverted {
  double y;
  double y_minus_x;
  double err;         // on the value
  double err_offset;  // on y - x, which the series path carries exactly
};

double log1p_pow_q(double y, double q) {
  // ln(1 + y^q) without overflow for large y.
  if (y > 1.0) return q * std::log(y) + std::log1p(std::pow(y, -q));
  return std::log1p(std::pow(y, q));
}

double cosh_from_sinh(double y, double p, double q) {
  return std::exp(log1p_pow_q(y, q) / p);
}

Inverted invert_G(const ParamPair& pair, double x) {
  const double p = pair.p();
  const double q = pair.q();

  const auto series = detail::inverse_series(p, q);
  if (std::pow(x, q) <= 0.05) {
    const double bound = series.remainder_bound(x, q);
    if (bound <= 2e-15 * (1.0 + x)) {
      const double d = series.offset(x, q, +1.0);
      const double y = x + d;
      return {y, d, bound + 0.5 * kEps * y, bound + kEps * std::fabs(d)};
    }
  }

  const double tol_res = kResidualTol * (1.0 + x);
  const double quad_tol = std::max(0.25 * tol_res, 1e-15);
  const double r = dual_index(pair);

  // The integrand is below 1 everywhere, so the root lies at or above x.
  double lo = x;
  double hi;
  double y;
  if (r > 1.0) {
    // Bounded branch: seed the bracket through the dual-family tangent,
    // which is well conditioned all the way to the endpoint.
    const double hint = tam_pq(ParamPair(r, q), x).value;
    if (hint > kOverflowCap)
      throw OverflowSignal("sinh_{p,q} exceeds 1e12 near the branch endpoint");
    lo = std::max(lo, 0.999 * hint - 1e-9);
    hi = 1.001 * hint + 1e-9;
    for (int i = 0; integral_G(pair, hi, quad_tol).value < x; ++i) {
      if (i >= 80) throw ConvergenceError("sinh_{p,q}: bracket search failed");
      lo = hi;
      hi *= 2.0;
    }
    if (integral_G(pair, lo, quad_tol).value > x) lo = x;
    y = std::clamp(hint, lo, hi);
  } else {
    hi = std::max(2.0 * x, 1.0);
    for (int i = 0; integral_G(pair, hi, quad_tol).value < x; ++i) {
      if (hi > 2.0 * kOverflowCap)
        throw OverflowSignal("sinh_{p,q} exceeds 1e12");
      if (i >= 80) throw ConvergenceError("sinh_{p,q}: bracket search failed");
      lo = hi;
      hi *= 2.0;
    }
    y = std::clamp(x + series.offset(x, q, +1.0), lo, hi);
  }
  if (!(y > lo) || !(y < hi)) y = 0.5 * (lo + hi);

  double resid = 0.0;
  double quad_err = 0.0;
  double slope = 1.0;  // dy/dx = (1 + y^q)^(1/p)
  double step1 = std::numeric_limits<double>::infinity();
  double step2 = std::numeric_limits<double>::infinity();
  for (int iter = 0;; ++iter) {
    if (iter >= kMaxIter)
      throw ConvergenceError("sinh_{p,q}: safeguarded Newton did not converge");
    const QuadResult G = integral_G(pair, y, quad_tol);
    resid = G.value - x;
    quad_err = G.err_est;
    slope = cosh_from_sinh(y, p, q);
    if (std::fabs(resid) <= tol_res) break;
    if (resid < 0.0)
      lo = y;
    else
      hi = y;
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-16 * (1.0 + hi) || mid <= lo || mid >= hi) {
      y = std::clamp(mid, lo, hi);
      break;
    }
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
  if (y > kOverflowCap) throw OverflowSignal("sinh_{p,q} exceeds 1e12");
  const double err = (std::fabs(resid) + quad_err) * slope + 0.5 * kEps * y;
  return {y, y - x, err, err};
}

}  // namespace

HypValues hyp_values(const ParamPair& pair, double x) {
  if (!std::isfinite(x) || x < 0.0)
    throw DomainError("argument must be finite and nonnegative");
  const ParamPair dual(dual_index(pair), pair.q());
  if (x >= half_period(dual).upper_bound())
    throw DomainError("argument at or beyond the branch endpoint pi_{r,q}/2");

  const double p = pair.p();
  const double q = pair.q();
  if (x == 0.0)
    return {{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0},
            0.0, 0.0, 0.0, 1.0};

  const Inverted inv = invert_G(pair, x);
  const double sh = inv.y;
  const double es = inv.err;
  const double shq = std::pow(sh, q);
  const double ln_opp = log1p_pow_q(sh, q);
  const double opp = 1.0 + shq;

  const double ch = std::exp(ln_opp / p);
  const double dch = (q / p) * std::exp((q - 1.0) * std::log(sh) +
                                        (1.0 / p - 1.0) * ln_opp);
  const double ech = dch * es + kEps * ch;

  // Round toward the open range [0, 1) when the true value sits within half
  // an ulp of 1.
  const double tamh =
      std::min(sh <= 1.0 ? sh * std::exp(-ln_opp / q)
                         : std::exp(std::log(sh) - ln_opp / q),
               std::nextafter(1.0, 0.0));
  const double dtamh = std::exp(-(1.0 + 1.0 / q) * ln_opp);
  const double etamh = dtamh * es + kEps * tamh;

  const double tanh_v = sh <= 1.0 ? sh * std::exp(-ln_opp / p)
                                  : std::exp(std::log(sh) - ln_opp / p);
  const double dtanh = std::exp(-(1.0 + 1.0 / p) * ln_opp) *
                       std::fabs(1.0 + shq * (1.0 - q / p));
  const double etanh = dtanh * es + kEps * tanh_v;

  return {{sh, es},       {ch, ech},      {tamh, etamh}, {tanh_v, etanh},
          inv.y_minus_x, inv.err_offset, shq,           opp};
}

FnValue sinh_pq(const ParamPair& pair, double x) {
  return hyp_values(pair, x).sinh;
}

FnValue cosh_pq(const ParamPair& pair, double x) {
  return hyp_values(pair, x).cosh;
}

FnValue tamh_pq(const ParamPair& pair, double x) {
  return hyp_values(pair, x).tamh;
}

FnValue tanh_pq(const ParamPair& pair, double x) {
  return hyp_values(pair, x).tanh;
}

FnValue asinh_pq(const ParamPair& pair, double y) {
  if (!std::isfinite(y) || y < 0.0)
    throw DomainError("asinh_{p,q} requires finite y >= 0");
  const QuadResult r = integral_G(pair, y);
  return {r.value, r.err_est};
}

}  // namespace gentrig
