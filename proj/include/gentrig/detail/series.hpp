#pragma once

namespace gentrig::detail {

// 1 - t^q for t in [0, 1], stable against cancellation as t -> 1.
double one_minus_pow(double t, double q);

// Coefficients of the small-argument inverse series shared by both
// inversion families,
//   y(x) = x + sign*a1*x^(q+1) + b2*x^(2q+1) + O(x^(3q+1)),
// with sign = -1 for the bounded family and +1 for the hyperbolic one.
// k3 is a conservative factor for the x^(3q+1) remainder, valid while
// x^q stays small.
struct InverseSeries {
  double a1;
  double b2;
  double k3;

  double offset(double x, double q, double sign) const;      // y - x
  double remainder_bound(double x, double q) const;          // k3 * x^(3q+1)
};

InverseSeries inverse_series(double p, double q);

}  // namespace gentrig::detail
