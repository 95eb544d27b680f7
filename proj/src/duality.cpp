#include "gentrig/duality.hpp"

#include <cmath>
#include <limits>

#include "gentrig/ghf.hpp"
#include "gentrig/gtf.hpp"

namespace gentrig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// base^expo with first-order error propagation; exponentiation runs in log
// space so near-unit bases keep their digits.
FnValue pow_with_err(const FnValue& base, double expo) {
  const double v = std::exp(expo * std::log(base.value));
  const double err =
      std::fabs(expo) * v * (base.err_est / base.value) + kEps * v;
  return {v, err};
}

}  // namespace

DualPairing::DualPairing(const ParamPair& primal)
    : primal_(primal), dual_(dual_index(primal), primal.q()) {}

DualTrigValues trig_via_dual(const DualPairing& pairing, double x) {
  const HypValues hv = hyp_values(pairing.dual(), x);
  const double r = pairing.dual().p();
  const double p = pairing.primal().p();
  return {hv.tamh, pow_with_err(hv.cosh, -r / p), hv.sinh};
}

DualHypValues hyp_via_dual(const DualPairing& pairing, double x) {
  const TrigValues tv = trig_values(pairing.dual(), x);
  const double r = pairing.dual().p();
  const double p = pairing.primal().p();
  return {tv.tam, pow_with_err(tv.cos, -r / p), tv.sin};
}

FnValue sin_via_dual(const DualPairing& pairing, double x) {
  return trig_via_dual(pairing, x).sin;
}
FnValue cos_via_dual(const DualPairing& pairing, double x) {
  return trig_via_dual(pairing, x).cos;
}
FnValue tam_via_dual(const DualPairing& pairing, double x) {
  return trig_via_dual(pairing, x).tam;
}
FnValue sinh_via_dual(const DualPairing& pairing, double x) {
  return hyp_via_dual(pairing, x).sinh;
}
FnValue cosh_via_dual(const DualPairing& pairing, double x) {
  return hyp_via_dual(pairing, x).cosh;
}
FnValue tamh_via_dual(const DualPairing& pairing, double x) {
  return hyp_via_dual(pairing, x).tamh;
}

FnValue sin_via_double_dual(const DualPairing& pairing, double x) {
  // sinh_{r,q}/cosh_{r,q}^(r/q) with both factors expanded back through the
  // second transform: tam_{p,q} * cos_{p,q}^(p/q).
  const TrigValues tv = trig_values(pairing.primal(), x);
  const double p = pairing.primal().p();
  const double q = pairing.primal().q();
  const FnValue cpq = pow_with_err(tv.cos, p / q);
  const double v = tv.tam.value * cpq.value;
  const double err = std::fabs(tv.tam.err_est * cpq.value) +
                     std::fabs(tv.tam.value * cpq.err_est) + kEps * v;
  return {v, err};
}

FnValue cos_via_double_dual(const DualPairing& pairing, double x) {
  const TrigValues tv = trig_values(pairing.primal(), x);
  const double p = pairing.primal().p();
  const double r = pairing.dual().p();
  return pow_with_err(pow_with_err(tv.cos, -p / r), -r / p);
}

FnValue tam_via_double_dual(const DualPairing& pairing, double x) {
  // tam_{p,q} -> sinh_{r,q} -> tam_{p,q}; the loop closes on the native value.
  return trig_values(pairing.primal(), x).tam;
}

}  // namespace gentrig
