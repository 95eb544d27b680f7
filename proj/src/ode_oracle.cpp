#include "gentrig/ode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gentrig/errors.hpp"
#include "gentrig/ghf.hpp"
#include "gentrig/gtf.hpp"

namespace gentrig {

namespace {

double signed_pow(double v, double e) {
  return v >= 0.0 ? std::pow(v, e) : -std::pow(-v, e);
}

struct State {
  double u, v;
};

struct Rhs {
  double p, q;
  double k;     // (p-1) q / p
  double sign;  // -1 trigonometric, +1 hyperbolic

  State operator()(const State& s) const {
    return {signed_pow(s.v, 1.0 / (p - 1.0)),
            sign * k * signed_pow(s.u, q - 1.0)};
  }
};

// Dormand-Prince 5(4) tableau.
constexpr double kA21 = 1.0 / 5.0;
constexpr double kA31 = 3.0 / 40.0, kA32 = 9.0 / 40.0;
constexpr double kA41 = 44.0 / 45.0, kA42 = -56.0 / 15.0, kA43 = 32.0 / 9.0;
constexpr double kA51 = 19372.0 / 6561.0, kA52 = -25360.0 / 2187.0,
                 kA53 = 64448.0 / 6561.0, kA54 = -212.0 / 729.0;
constexpr double kA61 = 9017.0 / 3168.0, kA62 = -355.0 / 33.0,
                 kA63 = 46732.0 / 5247.0, kA64 = 49.0 / 176.0,
                 kA65 = -5103.0 / 18656.0;
constexpr double kB1 = 35.0 / 384.0, kB3 = 500.0 / 1113.0, kB4 = 125.0 / 192.0,
                 kB5 = -2187.0 / 6784.0, kB6 = 11.0 / 84.0;
constexpr double kE1 = 35.0 / 384.0 - 5179.0 / 57600.0;
constexpr double kE3 = 500.0 / 1113.0 - 7571.0 / 16695.0;
constexpr double kE4 = 125.0 / 192.0 - 393.0 / 640.0;
constexpr double kE5 = -2187.0 / 6784.0 + 92097.0 / 339200.0;
constexpr double kE6 = 11.0 / 84.0 - 187.0 / 2100.0;
constexpr double kE7 = -1.0 / 40.0;

class Stepper {
 public:
  Stepper(const Rhs& rhs, double x0, State y0, double tol)
      : rhs_(rhs), x_(x0), y_(y0), tol_(tol), h_(1e-3) {}

  double x() const { return x_; }
  const State& y() const { return y_; }

  // Advances to exactly `target`, reporting each accepted step.
  template <typename OnStep>
  void advance(double target, OnStep&& on_step) {
    int steps = 0;
    while (x_ < target) {
      if (++steps > 2'000'000)
        throw ConvergenceError("ODE oracle exceeded its step budget");
      const double h = std::min(h_, target - x_);
      if (h < 1e-14 * (1.0 + std::fabs(x_)))
        throw ConvergenceError("ODE oracle step control stalled");
      State ynew;
      const double err = try_step(h, ynew);
      if (err <= 1.0) {
        x_ += h;
        y_ = ynew;
        on_step(x_, y_);
        h_ = h * std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 1.0,
                            5.0);
      } else {
        h_ = h * std::clamp(0.9 * std::pow(err, -0.2), 0.2, 0.9);
      }
    }
  }

 private:
  double try_step(double h, State& out) const {
    const State k1 = rhs_(y_);
    const State k2 = rhs_(add(y_, h, {kA21 * k1.u, kA21 * k1.v}));
    const State k3 = rhs_(add(y_, h,
                              {kA31 * k1.u + kA32 * k2.u,
                               kA31 * k1.v + kA32 * k2.v}));
    const State k4 = rhs_(add(y_, h,
                              {kA41 * k1.u + kA42 * k2.u + kA43 * k3.u,
                               kA41 * k1.v + kA42 * k2.v + kA43 * k3.v}));
    const State k5 = rhs_(
        add(y_, h,
            {kA51 * k1.u + kA52 * k2.u + kA53 * k3.u + kA54 * k4.u,
             kA51 * k1.v + kA52 * k2.v + kA53 * k3.v + kA54 * k4.v}));
    const State k6 = rhs_(add(
        y_, h,
        {kA61 * k1.u + kA62 * k2.u + kA63 * k3.u + kA64 * k4.u + kA65 * k5.u,
         kA61 * k1.v + kA62 * k2.v + kA63 * k3.v + kA64 * k4.v +
             kA65 * k5.v}));
    out = add(y_, h,
              {kB1 * k1.u + kB3 * k3.u + kB4 * k4.u + kB5 * k5.u + kB6 * k6.u,
               kB1 * k1.v + kB3 * k3.v + kB4 * k4.v + kB5 * k5.v +
                   kB6 * k6.v});
    const State k7 = rhs_(out);
    const double e_u = kE1 * k1.u + kE3 * k3.u + kE4 * k4.u + kE5 * k5.u +
                       kE6 * k6.u + kE7 * k7.u;
    const double e_v = kE1 * k1.v + kE3 * k3.v + kE4 * k4.v + kE5 * k5.v +
                       kE6 * k6.v + kE7 * k7.v;
    const double su =
        tol_ + tol_ * std::max(std::fabs(y_.u), std::fabs(out.u));
    const double sv =
        tol_ + tol_ * std::max(std::fabs(y_.v), std::fabs(out.v));
    const double eu = h * e_u / su;
    const double ev = h * e_v / sv;
    return std::sqrt(0.5 * (eu * eu + ev * ev));
  }

  static State add(const State& y, double h, const State& d) {
    return {y.u + h * d.u, y.v + h * d.v};
  }

  Rhs rhs_;
  double x_;
  State y_;
  double tol_;
  double h_;
};

struct Setup {
  Rhs rhs;
  double x0;
  State y0;
  double limit;  // branch endpoint (infinity when unbounded)
};

Setup prepare(const ParamPair& pair, IvpKind kind) {
  const double p = pair.p();
  const double q = pair.q();
  if (!(p > 1.0) || !(q >= 1.0))
    throw DomainError("ODE oracle is restricted to p > 1 and q >= 1");
  const double sign = kind == IvpKind::trigonometric ? -1.0 : 1.0;
  const Rhs rhs{p, q, (p - 1.0) * q / p, sign};

  // Series start keeps the |u|^(q-2) u factor away from u = 0; the slope
  // follows from the flux invariant |u'|^p +- |u|^q = 1.
  const double x0 = 1e-3;
  const double u0 = x0 + sign * std::pow(x0, q + 1.0) / (p * (q + 1.0));
  const double du0 = std::pow(1.0 + sign * std::pow(u0, q), 1.0 / p);
  const State y0{u0, std::pow(du0, p - 1.0)};

  const HalfPeriod hp = kind == IvpKind::trigonometric
                            ? half_period(pair)
                            : half_period(ParamPair(dual_index(pair), q));
  return {rhs, x0, y0, hp.upper_bound()};
}

}  // namespace

Trajectory integrate_ivp(const ParamPair& pair, double x_end, double tol,
                         IvpKind kind) {
  if (!(x_end > 0.0) || !std::isfinite(x_end))
    throw DomainError("x_end must be positive and finite");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const Setup s = prepare(pair, kind);
  if (x_end > 0.99 * s.limit)
    throw DomainError("x_end too close to the branch endpoint");

  Trajectory traj;
  traj.xs.push_back(s.x0);
  traj.us.push_back(s.y0.u);
  traj.vs.push_back(s.y0.v);
  Stepper stepper(s.rhs, s.x0, s.y0, tol);
  stepper.advance(x_end, [&](double x, const State& y) {
    traj.xs.push_back(x);
    traj.us.push_back(y.u);
    traj.vs.push_back(y.v);
  });
  return traj;
}

CompareResult compare_detailed(const ParamPair& pair, int n_samples,
                               IvpKind kind, double tol) {
  if (n_samples < 1) throw DomainError("need at least one sample");
  const Setup s = prepare(pair, kind);
  const double x_end =
      std::isfinite(s.limit) ? 0.9 * s.limit : 2.0;

  CompareResult result{0.0, {}};
  Stepper stepper(s.rhs, s.x0, s.y0, tol);
  for (int i = 1; i <= n_samples; ++i) {
    const double xi = std::max(s.x0, x_end * i / n_samples);
    stepper.advance(xi, [](double, const State&) {});
    const double ref = kind == IvpKind::trigonometric
                           ? sin_pq(pair, xi).value
                           : sinh_pq(pair, xi).value;
    const double err = std::fabs(stepper.y().u - ref);
    result.samples.emplace_back(xi, err);
    result.max_abs_error = std::max(result.max_abs_error, err);
  }
  return result;
}

double compare(const ParamPair& pair, int n_samples, IvpKind kind,
               double tol) {
  return compare_detailed(pair, n_samples, kind, tol).max_abs_error;
}

}  // namespace gentrig
