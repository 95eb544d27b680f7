#pragma once

namespace gentrig {

// Evaluation result together with a heuristic error estimate.  The estimate
// combines quadrature and inversion residuals with rounding floors; it is
// not a rigorous interval bound.
struct FnValue {
  double value;
  double err_est;
};

}  // namespace gentrig
