#pragma once

#include "gentrig/fn_value.hpp"
#include "gentrig/params.hpp"

namespace gentrig {

// A pair together with its dual (same q, p replaced by the dual index r).
// Dualizing twice returns to the original pair.
class DualPairing {
 public:
  explicit DualPairing(const ParamPair& primal);

  const ParamPair& primal() const noexcept { return primal_; }
  const ParamPair& dual() const noexcept { return dual_; }

 private:
  ParamPair primal_;
  ParamPair dual_;
};

// Bounded-family values for the primal pair evaluated entirely through the
// hyperbolic family at the dual pair:
//   sin_{p,q} = tamh_{r,q},  cos_{p,q} = cosh_{r,q}^(-r/p),  tam_{p,q} = sinh_{r,q}.
// One dual-side inversion is shared by the three fields.
struct DualTrigValues {
  FnValue sin, cos, tam;
};
DualTrigValues trig_via_dual(const DualPairing& pairing, double x);

// The mirror image: hyperbolic values for the primal pair through the
// bounded family at the dual pair:
//   sinh_{p,q} = tam_{r,q},  cosh_{p,q} = cos_{r,q}^(-r/p),  tamh_{p,q} = sin_{r,q}.
struct DualHypValues {
  FnValue sinh, cosh, tamh;
};
DualHypValues hyp_via_dual(const DualPairing& pairing, double x);

FnValue sin_via_dual(const DualPairing& pairing, double x);
FnValue cos_via_dual(const DualPairing& pairing, double x);
FnValue tam_via_dual(const DualPairing& pairing, double x);
FnValue sinh_via_dual(const DualPairing& pairing, double x);
FnValue cosh_via_dual(const DualPairing& pairing, double x);
FnValue tamh_via_dual(const DualPairing& pairing, double x);

// Both transforms composed: the value comes back expressed in native
// bounded-family evaluations of the primal pair, so agreement with the plain
// evaluators closes the involution loop numerically.
FnValue sin_via_double_dual(const DualPairing& pairing, double x);
FnValue cos_via_double_dual(const DualPairing& pairing, double x);
FnValue tam_via_double_dual(const DualPairing& pairing, double x);

}  // namespace gentrig
