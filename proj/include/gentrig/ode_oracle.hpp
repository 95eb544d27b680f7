#pragma once

#include <utility>
#include <vector>

#include "gentrig/params.hpp"

namespace gentrig {

enum class IvpKind { trigonometric, hyperbolic };

// Samples of the flux-form first-order system
//   u' = sign(v)|v|^(1/(p-1)),   v' = -+ ((p-1)q/p) |u|^(q-2) u,
// whose solution from u(0)=0, u'(0)=1 is the bounded (-) or hyperbolic (+)
// principal function.  vs holds the flux variable |u'|^(p-2) u'.
struct Trajectory {
  std::vector<double> xs;
  std::vector<double> us;
  std::vector<double> vs;
};

// Adaptive Dormand-Prince 5(4) integration from a series-based start at
// x0 = 1e-3.  Restricted to p > 1 and q >= 1, where the right-hand side is
// Lipschitz along the trajectory.
Trajectory integrate_ivp(const ParamPair& pair, double x_end, double tol,
                         IvpKind kind = IvpKind::trigonometric);

struct CompareResult {
  double max_abs_error;
  std::vector<std::pair<double, double>> samples;  // (x, |u - inverse-path|)
};

// Integrates once and compares u against the inversion-path evaluator at
// n_samples equally spaced points.
CompareResult compare_detailed(const ParamPair& pair, int n_samples,
                               IvpKind kind = IvpKind::trigonometric,
                               double tol = 1e-10);

double compare(const ParamPair& pair, int n_samples,
               IvpKind kind = IvpKind::trigonometric, double tol = 1e-10);

}  // namespace gentrig
