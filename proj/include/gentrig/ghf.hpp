#pragma once

#include "gentrig/fn_value.hpp"
#include "gentrig/params.hpp"

namespace gentrig {

// Hyperbolic-family values sharing one inversion of the defining integral.
// The branch is [0, pi_{r,q}/2) with r the dual index: bounded when r > 1
// (p < q), the whole half line otherwise.
struct HypValues {
  FnValue sinh, cosh, tamh, tanh;
  double sinh_minus_x;         // sinh - x at full relative precision near 0
  double sinh_minus_x_err;     // error estimate on the offset itself
  double sinh_pow_q;           // sinh^q
  double one_plus_sinh_pow_q;  // cosh^p
};

HypValues hyp_values(const ParamPair& pair, double x);

// sinh_{p,q}: inverse of integral_G; throws OverflowSignal past 1e12.
FnValue sinh_pq(const ParamPair& pair, double x);
// cosh_{p,q} = (1 + sinh^q)^(1/p), the derivative of sinh_{p,q}.
FnValue cosh_pq(const ParamPair& pair, double x);
// tamh_{p,q} = sinh / cosh^(p/q), strictly below 1.
FnValue tamh_pq(const ParamPair& pair, double x);
// tanh_{p,q} = sinh / cosh.
FnValue tanh_pq(const ParamPair& pair, double x);
// asinh_{p,q}(y) = G_{p,q}(y) for y >= 0.
FnValue asinh_pq(const ParamPair& pair, double y);

}  // namespace gentrig
