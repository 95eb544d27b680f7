#pragma once

#include <functional>

#include "gentrig/params.hpp"

namespace gentrig {

struct QuadResult {
  double value;
  double err_est;  // successive-level difference; <= effective tolerance on success
};

// Default tolerance for the integral evaluators.  The GENTRIG_TOL
// environment variable overrides it (clamped to [1e-15, 1e-3]).
double default_tolerance();

// Integrand receiving the abscissa together with the distances to both
// endpoints, computed without rounding loss.  Singular factors must be
// expressed through the distances (e.g. 1 - t^2 = to_b * (2 - to_b) on
// [0, 1]); the abscissa alone cannot resolve them below one ulp of the
// endpoint.
using OffsetIntegrand =
    std::function<double(double x, double from_a, double to_b)>;

// Tanh-sinh (double-exponential) quadrature on (a, b) with level doubling.
// Absorbs algebraic endpoint singularities; tol acts as an absolute
// tolerance with a relative floor of tol*|I|.
QuadResult integrate_singular(const OffsetIntegrand& f, double a, double b,
                              double tol);

// Convenience form for integrands that do not need the endpoint offsets.
// Endpoint singularities are still integrated, but their resolution is
// limited to about sqrt(machine epsilon).
QuadResult integrate_singular(const std::function<double(double)>& f, double a,
                              double b, double tol);

// F_{p,q}(y) = integral of (1 - t^q)^(-1/p) over [0, y],  0 <= y < 1.
QuadResult integral_F(const ParamPair& pair, double y,
                      double tol = default_tolerance());

// G_{p,q}(y) = integral of (1 + t^q)^(-1/p) over [0, y],  y >= 0.
QuadResult integral_G(const ParamPair& pair, double y,
                      double tol = default_tolerance());

}  // namespace gentrig
