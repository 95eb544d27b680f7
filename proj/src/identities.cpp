#include "gentrig/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gentrig/detail/series.hpp"
#include "gentrig/duality.hpp"
#include "gentrig/errors.hpp"
#include "gentrig/ghf.hpp"
#include "gentrig/gtf.hpp"
#include "gentrig/ode_oracle.hpp"
#include "gentrig/quad.hpp"

namespace gentrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Span substituted for an unbounded branch when a sweep needs a finite
// sampling window.
constexpr double kInfiniteSpanStrict = 2.5;
constexpr double kInfiniteSpanMulti = 2.0;

constexpr double kThrPythagorean = 1e-10;
constexpr double kThrDuality = 1e-10;
constexpr double kThrDualityDouble = 2e-10;
constexpr double kThrMultiAngle = 1e-9;
constexpr double kThrDoubleAngle = 1e-8;
constexpr double kThrIntermediate = 1e-10;
constexpr double kThrOde = 1e-6;

// Cancellation-free ingredients for the strict margins.  d carries the
// offset of the principal value from x at full relative precision, so the
// margin forms below never subtract nearly equal O(1) quantities.
struct StrictParts {
  double x;
  double d;        // sin - x  (trig)  or  sinh - x  (hyp)
  double s;        // sin or sinh
  double powq;     // s^q
  double comp;     // 1 - s^q (trig) or 1 + s^q (hyp)
  double ln_comp;  // log(comp)
  double es;       // error estimate on the offset d (the margins are
                   // functions of (x, d), so d's error is what propagates)
};

StrictParts strict_parts(const ParamPair& pair, double x, Family family) {
  if (!(x > 0.0))
    throw DomainError("margin abscissa must be strictly positive");
  if (family == Family::trig) {
    const TrigValues tv = trig_values(pair, x);
    return {x,
            tv.sin_minus_x,
            tv.sin.value,
            tv.sin_pow_q,
            tv.one_minus_sin_pow_q,
            std::log1p(-tv.sin_pow_q),
            tv.sin_minus_x_err};
  }
  const HypValues hv = hyp_values(pair, x);
  return {x,
          hv.sinh_minus_x,
          hv.sinh.value,
          hv.sinh_pow_q,
          hv.one_plus_sinh_pow_q,
          std::log1p(hv.sinh_pow_q),
          hv.sinh_minus_x_err};
}

// tam - x (or tamh - x): d + s*((comp)^(-1/q) - 1).
double tau_offset(const StrictParts& P, double q) {
  return P.d + P.s * std::expm1(-P.ln_comp / q);
}

double tau_slope(const StrictParts& P, double q) {
  return std::exp(-(1.0 + 1.0 / q) * P.ln_comp);
}

std::vector<double> chebyshev_points(double lo, double hi, int n) {
  std::vector<double> xs(n);
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i)
    xs[i] = mid - half * std::cos(std::numbers::pi * (2 * i + 1) / (2.0 * n));
  return xs;
}

double family_span(const ParamPair& pair, Family family, double fallback) {
  const HalfPeriod hp = family == Family::trig
                            ? half_period(pair)
                            : half_period(ParamPair(dual_index(pair), pair.q()));
  return hp.is_finite() ? hp.value() : fallback;
}

std::vector<ParamPair> grid_pairs(const GridSpec& grid) {
  std::vector<ParamPair> pairs;
  for (double q : grid.q_values) {
    if (!(q > 0.0) || !std::isfinite(q)) continue;
    std::vector<double> ps = grid.p_values;
    if (grid.add_near_boundary_p) ps.push_back(q / (q + 1.0) + 0.05);
    for (double p : ps) {
      try {
        pairs.emplace_back(p, q);
      } catch (const DomainError&) {
        // combination outside the admissible range: filtered out
      }
    }
  }
  return pairs;
}

void check_grid(const GridSpec& grid) {
  if (grid.n_x < 2) throw DomainError("grid needs n_x >= 2");
  if (!(grid.domain_clip > 0.0) || !(grid.domain_clip < 0.5))
    throw DomainError("grid clip must lie in (0, 0.5)");
}

MarginSample failed_sample(double x) {
  return {x, std::numeric_limits<double>::quiet_NaN(),
          std::numeric_limits<double>::infinity()};
}

MarginReport assemble(std::string suite, const ParamPair& pair, Family family,
                      std::vector<MarginSample> samples,
                      std::optional<double> threshold) {
  MarginReport rep;
  rep.suite = std::move(suite);
  rep.p = pair.p();
  rep.q = pair.q();
  rep.r = dual_index(pair);
  rep.family = family;
  rep.samples = std::move(samples);
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.max_abs_margin = 0.0;
  rep.threshold = threshold;
  bool ok = !rep.samples.empty();
  for (const MarginSample& s : rep.samples) {
    if (!std::isfinite(s.margin)) {
      ok = false;
      continue;
    }
    rep.min_margin = std::min(rep.min_margin, s.margin);
    rep.max_abs_margin = std::max(rep.max_abs_margin, std::fabs(s.margin));
    if (threshold ? std::fabs(s.margin) > *threshold
                  : !(s.margin - s.err_est > 0.0))
      ok = false;
  }
  rep.passed = ok;
  return rep;
}

using StrictFn = Margin (*)(const ParamPair&, double, Family);

Margin ma_min_margin(const ParamPair& pair, double x, Family family) {
  const MaMargins m = ma_margin(pair, x, family);
  return m.lower.value <= m.upper.value ? m.lower : m.upper;
}

std::vector<MarginReport> sweep_strict(const std::string& name, StrictFn fn,
                                       const GridSpec& grid) {
  std::vector<MarginReport> out;
  for (const ParamPair& pair : grid_pairs(grid)) {
    for (Family family : {Family::trig, Family::hyp}) {
      const double span = family_span(pair, family, kInfiniteSpanStrict);
      const auto xs = chebyshev_points(grid.domain_clip * span,
                                       (1.0 - grid.domain_clip) * span,
                                       grid.n_x);
      std::vector<MarginSample> samples;
      samples.reserve(xs.size());
      for (double x : xs) {
        try {
          const Margin m = fn(pair, x, family);
          samples.push_back({x, m.value, m.err_est});
        } catch (const std::exception&) {
          samples.push_back(failed_sample(x));
        }
      }
      out.push_back(assemble(
          name + (family == Family::trig ? "-trig" : "-hyp"), pair, family,
          std::move(samples), std::nullopt));
    }
  }
  return out;
}

std::vector<MarginReport> sweep_pythagorean(const GridSpec& grid) {
  std::vector<MarginReport> out;
  for (const ParamPair& pair : grid_pairs(grid)) {
    const double p = pair.p();
    const double q = pair.q();
    for (Family family : {Family::trig, Family::hyp}) {
      const double span = family_span(pair, family, kInfiniteSpanStrict);
      const auto xs = chebyshev_points(grid.domain_clip * span,
                                       (1.0 - grid.domain_clip) * span,
                                       grid.n_x);
      std::vector<MarginSample> samples;
      for (double x : xs) {
        try {
          if (family == Family::trig) {
            const TrigValues tv = trig_values(pair, x);
            const double res = std::fabs(std::pow(tv.cos.value, p) +
                                         std::pow(tv.sin.value, q) - 1.0);
            samples.push_back({x, res, 8.0 * kEps});
          } else {
            const HypValues hv = hyp_values(pair, x);
            const double chp = std::pow(hv.cosh.value, p);
            const double res =
                std::fabs(chp - std::pow(hv.sinh.value, q) - 1.0) / chp;
            samples.push_back({x, res, 8.0 * kEps});
          }
        } catch (const std::exception&) {
          samples.push_back(failed_sample(x));
        }
      }
      out.push_back(assemble(
          family == Family::trig ? "pythagorean-trig" : "pythagorean-hyp",
          pair, family, std::move(samples), kThrPythagorean));
    }
  }
  return out;
}

double rel_diff(const FnValue& a, const FnValue& b) {
  return std::fabs(a.value - b.value) /
         (1.0 + std::max(std::fabs(a.value), std::fabs(b.value)));
}

// Upper end of the x-range on which a transform comparison is resolvable.
// The tangent-type quotients lose relative precision like eps/(1 - sin^q);
// keeping 1 - sin^q >= 0.01 on the side whose bounded integral is inverted
// leaves both paths with at least ~1e-11 relative accuracy.  `probe` is the
// pair whose sin saturates: the native pair for the bounded family, the dual
// pair for the hyperbolic one.
double duality_cond_limit(const ParamPair& probe) {
  const double y_cond = std::pow(0.99, 1.0 / probe.q());
  return 0.98 * integral_F(probe, y_cond).value;
}

std::vector<MarginReport> sweep_duality(const GridSpec& grid) {
  std::vector<MarginReport> out;
  for (const ParamPair& pair : grid_pairs(grid)) {
    const DualPairing pairing(pair);

    const double span_t =
        std::min(family_span(pair, Family::trig, kInfiniteSpanStrict),
                 duality_cond_limit(pair) / (1.0 - grid.domain_clip));
    const auto xs_t = chebyshev_points(grid.domain_clip * span_t,
                                       (1.0 - grid.domain_clip) * span_t,
                                       grid.n_x);
    std::vector<MarginSample> st, sd;
    for (double x : xs_t) {
      try {
        const TrigValues tv = trig_values(pair, x);
        const DualTrigValues dv = trig_via_dual(pairing, x);
        const double m = std::max({rel_diff(tv.sin, dv.sin),
                                   rel_diff(tv.cos, dv.cos),
                                   rel_diff(tv.tam, dv.tam)});
        const double e = tv.sin.err_est + dv.sin.err_est + 4.0 * kEps;
        st.push_back({x, m, e});
      } catch (const std::exception&) {
        st.push_back(failed_sample(x));
      }
      try {
        const TrigValues tv = trig_values(pair, x);
        const double m =
            std::max({rel_diff(tv.sin, sin_via_double_dual(pairing, x)),
                      rel_diff(tv.cos, cos_via_double_dual(pairing, x)),
                      rel_diff(tv.tam, tam_via_double_dual(pairing, x))});
        sd.push_back({x, m, tv.sin.err_est + 4.0 * kEps});
      } catch (const std::exception&) {
        sd.push_back(failed_sample(x));
      }
    }
    out.push_back(assemble("duality-trig", pair, Family::trig, std::move(st),
                           kThrDuality));
    out.push_back(assemble("duality-double", pair, Family::trig, std::move(sd),
                           kThrDualityDouble));

    const double span_h =
        std::min(family_span(pair, Family::hyp, kInfiniteSpanStrict),
                 duality_cond_limit(pairing.dual()) / (1.0 - grid.domain_clip));
    const auto xs_h = chebyshev_points(grid.domain_clip * span_h,
                                       (1.0 - grid.domain_clip) * span_h,
                                       grid.n_x);
    std::vector<MarginSample> sh;
    for (double x : xs_h) {
      try {
        const HypValues hv = hyp_values(pair, x);
        const DualHypValues dv = hyp_via_dual(pairing, x);
        const double m = std::max({rel_diff(hv.sinh, dv.sinh),
                                   rel_diff(hv.cosh, dv.cosh),
                                   rel_diff(hv.tamh, dv.tamh)});
        const double e = hv.sinh.err_est + dv.sinh.err_est + 4.0 * kEps;
        sh.push_back({x, m, e});
      } catch (const std::exception&) {
        sh.push_back(failed_sample(x));
      }
    }
    out.push_back(assemble("duality-hyp", pair, Family::hyp, std::move(sh),
                           kThrDuality));
  }
  return out;
}

std::vector<MarginReport> sweep_multiangle(const GridSpec& grid) {
  std::vector<MarginReport> out;
  for (double q : grid.q_values) {
    if (!(q > 0.0) || !std::isfinite(q)) continue;
    const ParamPair base(2.0 * q / (2.0 + q), q);
    const HalfPeriod hp = half_period(base);
    const double span = hp.is_finite() ? hp.value() : kInfiniteSpanMulti;
    const auto xs = chebyshev_points(grid.domain_clip * span, 0.95 * span,
                                     grid.n_x);
    std::vector<MarginSample> samples;
    for (double x : xs) {
      try {
        const MultiAngleResiduals r = multiple_angle_residuals(q, x);
        const double m =
            std::max({r.sin_res, r.cos_res, r.sinh_res, r.cosh_res});
        samples.push_back({x, m, r.err_est});
      } catch (const std::exception&) {
        samples.push_back(failed_sample(x));
      }
    }
    out.push_back(assemble("multiangle", base, Family::trig,
                           std::move(samples), kThrMultiAngle));
  }
  return out;
}

std::vector<MarginReport> sweep_doubleangle(const GridSpec& grid) {
  std::vector<MarginReport> out;
  if (grid.q_values.empty()) return out;

  {
    const ParamPair pair(1.2, 3.0);
    const double quarter = 0.5 * half_period(pair).value();
    const auto xs = chebyshev_points(grid.domain_clip * quarter,
                                     0.95 * quarter, grid.n_x);
    std::vector<MarginSample> samples;
    for (double x : xs) {
      try {
        const Margin m = double_angle_653_residual(x);
        samples.push_back({x, m.value, m.err_est});
      } catch (const std::exception&) {
        samples.push_back(failed_sample(x));
      }
    }
    out.push_back(assemble("doubleangle-653", pair, Family::trig,
                           std::move(samples), kThrDoubleAngle));
  }
  {
    const ParamPair pair(1.2, 1.5);
    const double quarter = 0.5 * half_period(pair).value();
    const auto xs = chebyshev_points(grid.domain_clip * quarter,
                                     0.95 * quarter, grid.n_x);
    std::vector<MarginSample> samples;
    for (double x : xs) {
      try {
        const Margin m = double_angle_6532_residual(x);
        samples.push_back({x, m.value, m.err_est});
      } catch (const std::exception&) {
        samples.push_back(failed_sample(x));
      }
    }
    out.push_back(assemble("doubleangle-6532", pair, Family::trig,
                           std::move(samples), kThrDoubleAngle));
  }
  for (double q : {2.0, 3.0}) {
    const ParamPair pair(2.0, q);
    std::vector<MarginSample> samples;
    for (int i = 0; i < grid.n_x; ++i) {
      const double y = 5.0 * (i + 1) / grid.n_x;
      try {
        const Margin m = intermediate_41_residual(q, y);
        samples.push_back({y, m.value, m.err_est});
      } catch (const std::exception&) {
        samples.push_back(failed_sample(y));
      }
    }
    out.push_back(assemble("intermediate-41", pair, Family::hyp,
                           std::move(samples), kThrIntermediate));
  }
  return out;
}

std::vector<MarginReport> sweep_ode(const GridSpec& grid) {
  std::vector<MarginReport> out;
  if (grid.q_values.empty()) return out;
  for (double p : {2.0, 3.0, 4.0}) {
    for (double q : {2.0, 3.0, 4.0}) {
      const ParamPair pair(p, q);
      for (Family family : {Family::trig, Family::hyp}) {
        const IvpKind kind = family == Family::trig ? IvpKind::trigonometric
                                                    : IvpKind::hyperbolic;
        std::vector<MarginSample> samples;
        try {
          const CompareResult cmp = compare_detailed(pair, 12, kind, 1e-10);
          for (const auto& [x, err] : cmp.samples)
            samples.push_back({x, err, 1e-9});
        } catch (const std::exception&) {
          samples.push_back(failed_sample(0.0));
        }
        out.push_back(assemble(
            family == Family::trig ? "ode-trig" : "ode-hyp", pair, family,
            std::move(samples), kThrOde));
      }
    }
  }
  return out;
}

void append(std::vector<MarginReport>& all, std::vector<MarginReport> part) {
  for (auto& r : part) all.push_back(std::move(r));
}

}  // namespace

MaMargins ma_margin(const ParamPair& pair, double x, Family family) {
  const double p = pair.p();
  const double q = pair.q();
  const StrictParts P = strict_parts(pair, x, family);
  const double kexp = 1.0 / (p * (q + 1.0));

  const double E = std::expm1(kexp * P.ln_comp);  // comp^(1/(p(q+1))) - 1
  const double dE = (1.0 + E) * kexp * q * std::pow(P.s, q - 1.0) / P.comp;
  const double lower = P.d / x - E;
  const double e_lower = P.es * (1.0 / x + dE) +
                         kEps * (std::fabs(P.d / x) + std::fabs(E));

  double upper, e_upper;
  if (family == Family::trig) {
    upper = -P.d / x;
    e_upper = P.es / x + kEps * std::fabs(upper);
  } else {
    const double C = std::expm1(P.ln_comp / q);  // cosh^(p/q) - 1
    const double dC = (1.0 + C) * std::pow(P.s, q - 1.0) / P.comp;
    upper = C - P.d / x;
    e_upper = P.es * (1.0 / x + dC) +
              kEps * (std::fabs(C) + std::fabs(P.d / x));
  }
  return {{lower, e_lower}, {upper, e_upper}};
}

Margin wilker_margin(const ParamPair& pair, double x, Family family) {
  const double p = pair.p();
  const double q = pair.q();
  const double r = dual_index(pair);
  const StrictParts P = strict_parts(pair, x, family);

  const double A1 = std::expm1(p * std::log1p(P.d / x));
  const double dtau = tau_offset(P, q);
  const double B1 = std::expm1(r * std::log1p(dtau / x));
  const double dA = p * std::pow(P.s / x, p - 1.0) / x;
  const double dB = r * std::pow((x + dtau) / x, r - 1.0) * tau_slope(P, q) / x;
  const double err = P.es * (dA + dB) + kEps * (std::fabs(A1) + std::fabs(B1));
  return {A1 + B1, err};
}

Margin huygens_margin(const ParamPair& pair, double x, Family family) {
  const double q = pair.q();
  const double p = pair.p();
  const double r = dual_index(pair);
  const StrictParts P = strict_parts(pair, x, family);
  const double dtau = tau_offset(P, q);
  const double value = (p * P.d + r * dtau) / x;
  const double err = P.es * (p + r * tau_slope(P, q)) / x +
                     kEps * (p * std::fabs(P.d) + r * std::fabs(dtau)) / x;
  return {value, err};
}

Margin cusa_margin(const ParamPair& pair, double x, Family family) {
  const double p = pair.p();
  const double q = pair.q();
  const double r = dual_index(pair);
  const StrictParts P = strict_parts(pair, x, family);

  const double sgn = family == Family::trig ? -1.0 : 1.0;
  const double arg = sgn * r * P.powq / (p + r);
  const double R1 = std::expm1(std::log1p(arg) / q);
  const double dR = (1.0 + R1) * r * std::pow(P.s, q - 1.0) /
                    ((p + r) * (1.0 + arg));
  const double value = R1 - P.d / x;
  const double err = P.es * (1.0 / x + dR) +
                     kEps * (std::fabs(R1) + std::fabs(P.d / x));
  return {value, err};
}

MultiAngleResiduals multiple_angle_residuals(double q, double x) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw DomainError("multiple-angle formulas need q > 0");
  const double pstar = 2.0 * q / (2.0 + q);
  const ParamPair rhs_trig(pstar, q);
  const ParamPair lhs(pstar, 0.5 * q);
  const ParamPair rhs_hyp(2.0, q);
  if (!(x >= 0.0) || x >= half_period(rhs_trig).upper_bound())
    throw DomainError("argument outside [0, pi_{2q/(2+q),q}/2)");
  const double scale = std::pow(2.0, 2.0 / q);

  const TrigValues lt = trig_values(lhs, scale * x);
  const TrigValues rt = trig_values(rhs_trig, x);
  const double s = rt.sin.value;
  const double sqh = std::pow(s, 0.5 * q);
  const double one_minus_sqh = detail::one_minus_pow(s, 0.5 * q);
  const double rhs_sin = scale * s / std::pow(1.0 + sqh, 2.0 / q);
  const double rhs_cos =
      std::pow(one_minus_sqh / (1.0 + sqh), 1.0 / q + 0.5);
  const double sin_res = std::fabs(lt.sin.value - rhs_sin);
  const double cos_res = std::fabs(lt.cos.value - rhs_cos);

  const HypValues lh = hyp_values(lhs, scale * x);
  const HypValues rh = hyp_values(rhs_hyp, x);
  const double base = rh.cosh.value + std::pow(rh.sinh.value, 0.5 * q);
  const double rhs_sinh =
      scale * rh.sinh.value * std::pow(base, 2.0 / q);
  const double rhs_cosh = std::pow(base, 2.0 / q + 1.0);
  // The hyperbolic sides grow without bound toward the branch end, so their
  // residuals are taken relative to the value scale.
  const double sinh_res = std::fabs(lh.sinh.value - rhs_sinh) /
                          std::max(1.0, std::fabs(lh.sinh.value));
  const double cosh_res = std::fabs(lh.cosh.value - rhs_cosh) /
                          std::max(1.0, std::fabs(lh.cosh.value));

  const double err = lt.sin.err_est + lt.cos.err_est + lh.sinh.err_est +
                     lh.cosh.err_est +
                     scale * (rt.sin.err_est + rh.sinh.err_est) +
                     8.0 * kEps * (1.0 + rhs_cosh);
  return {sin_res, cos_res, sinh_res, cosh_res, err};
}

Margin double_angle_653_residual(double x) {
  const ParamPair pair(1.2, 3.0);
  const double quarter = 0.5 * half_period(pair).value();
  if (!(x >= 0.0) || x >= quarter)
    throw DomainError("argument outside [0, pi_{6/5,3}/4)");
  if (x == 0.0) return {0.0, 0.0};

  const TrigValues tv = trig_values(pair, x);
  const double c = tv.cos.value;
  const double w = std::pow(c, 0.6);            // cos^(3/5)
  const double omw = -std::expm1(0.6 * std::log(c));  // 1 - cos^(3/5)
  const double t3 = 3.0 * w + 1.0;
  const double num = 4.0 * std::pow(c, 0.2) * t3 * std::cbrt(omw);
  const double den = std::pow(16.0 * w + t3 * t3 * t3 * omw, 2.0 / 3.0);
  const FnValue lhs = sin_pq(pair, 2.0 * x);
  const double value = std::fabs(lhs.value - num / den);
  const double err = lhs.err_est + 8.0 * tv.cos.err_est + 8.0 * kEps;
  return {value, err};
}

double theta(double v) { return std::pow(2.0 * v / (1.0 + v), 2.0 / 3.0); }

double phi(double v) {
  const double t3 = 3.0 * v + 1.0;
  const double core = t3 * t3 * t3 * (1.0 - v);
  return 8.0 * std::sqrt(v * core) / (16.0 * v + core);
}

double psi(double v) {
  return 2.0 * std::pow(v, 0.6) / (1.0 + std::pow(v, 1.2));
}

Margin double_angle_6532_residual(double x) {
  const ParamPair pair(1.2, 1.5);
  const double quarter = 0.5 * half_period(pair).value();
  if (!(x >= 0.0) || x >= quarter)
    throw DomainError("argument outside [0, pi_{6/5,3/2}/4)");
  if (x == 0.0) return {0.0, 0.0};

  const TrigValues tv = trig_values(pair, x);
  const double rhs = theta(phi(psi(tv.cos.value)));
  const FnValue lhs = sin_pq(pair, 2.0 * x);
  const double value = std::fabs(lhs.value - rhs);
  const double err = lhs.err_est + 8.0 * tv.cos.err_est + 8.0 * kEps;
  return {value, err};
}

Margin intermediate_41_residual(double q, double y) {
  if (!(q > 0.0) || !std::isfinite(q))
    throw DomainError("intermediate identity needs q > 0");
  if (!std::isfinite(y) || y < 0.0)
    throw DomainError("intermediate identity needs finite y >= 0");
  if (y == 0.0) return {0.0, 0.0};

  const ParamPair hyp_pair(2.0, q);
  const ParamPair trig_pair(2.0 * q / (2.0 + q), 0.5 * q);
  const double scale = std::pow(2.0, 2.0 / q);
  const double z =
      scale * y /
      std::pow(std::pow(y, 0.5 * q) + std::sqrt(std::pow(y, q) + 1.0),
               2.0 / q);
  if (!(z < 1.0))
    throw DomainError("y too large: transformed argument reaches 1");

  const QuadResult lhs = integral_G(hyp_pair, y);
  const QuadResult rhs = integral_F(trig_pair, z);
  const double value = std::fabs(lhs.value - rhs.value / scale);
  const double err = lhs.err_est + rhs.err_est / scale + 4.0 * kEps * (1.0 + lhs.value);
  return {value, err};
}

GridSpec default_grid() {
  GridSpec g;
  g.q_values = {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
  g.p_values = {1.0, 1.2, 1.5, 2.0, 3.0, 5.0};
  g.n_x = 33;
  g.domain_clip = 0.02;
  g.add_near_boundary_p = true;
  return g;
}

std::vector<std::string> suite_names() {
  return {"pythagorean", "duality", "ma",         "wilker", "huygens",
          "cusa",        "multiangle", "doubleangle", "ode",    "all"};
}

std::vector<MarginReport> sweep(const std::string& suite,
                                const GridSpec& grid) {
  check_grid(grid);
  if (suite == "pythagorean") return sweep_pythagorean(grid);
  if (suite == "duality") return sweep_duality(grid);
  if (suite == "ma") return sweep_strict("ma", ma_min_margin, grid);
  if (suite == "wilker") return sweep_strict("wilker", wilker_margin, grid);
  if (suite == "huygens") return sweep_strict("huygens", huygens_margin, grid);
  if (suite == "cusa") return sweep_strict("cusa", cusa_margin, grid);
  if (suite == "multiangle") return sweep_multiangle(grid);
  if (suite == "doubleangle") return sweep_doubleangle(grid);
  if (suite == "ode") return sweep_ode(grid);
  if (suite == "all") {
    std::vector<MarginReport> all;
    append(all, sweep_pythagorean(grid));
    append(all, sweep_duality(grid));
    append(all, sweep_strict("ma", ma_min_margin, grid));
    append(all, sweep_strict("wilker", wilker_margin, grid));
    append(all, sweep_strict("huygens", huygens_margin, grid));
    append(all, sweep_strict("cusa", cusa_margin, grid));
    append(all, sweep_multiangle(grid));
    append(all, sweep_doubleangle(grid));
    append(all, sweep_ode(grid));
    return all;
  }
  throw DomainError("unknown suite: " + suite);
}

}  // namespace gentrig
