#pragma once

#include "gentrig/fn_value.hpp"
#include "gentrig/params.hpp"

namespace gentrig {

// The bounded-family values sharing one inversion of the defining integral,
// plus the cancellation-free pieces the identity layer builds margins from.
struct TrigValues {
  FnValue sin, cos, tam, tan;
  double sin_minus_x;          // sin - x at full relative precision near 0
  double sin_minus_x_err;      // error estimate on the offset itself
  double sin_pow_q;            // sin^q
  double one_minus_sin_pow_q;  // cos^p in stable form
};

// Evaluates everything at once; tam/tan fields may be non-finite where the
// quotients diverge (the single-value wrappers turn that into OverflowSignal).
TrigValues trig_values(const ParamPair& pair, double x);

// sin_{p,q}: inverse of integral_F, monotone on [0, pi_{p,q}/2).
FnValue sin_pq(const ParamPair& pair, double x);
// cos_{p,q} = (1 - sin^q)^(1/p), the derivative of sin_{p,q}.
FnValue cos_pq(const ParamPair& pair, double x);
// tam_{p,q} = sin / cos^(p/q).
FnValue tam_pq(const ParamPair& pair, double x);
// tan_{p,q} = sin / cos.
FnValue tan_pq(const ParamPair& pair, double x);
// asin_{p,q}(y) = F_{p,q}(y) for y in [0, 1).
FnValue asin_pq(const ParamPair& pair, double y);

}  // namespace gentrig
