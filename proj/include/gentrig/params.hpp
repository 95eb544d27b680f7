#pragma once

#include <optional>

namespace gentrig {

// Exponent pair (p, q) with q > 0 and p > q/(q+1), the admissible range for
// every generalized function in this library.  Construction validates; all
// downstream operations accept only constructed pairs.
class ParamPair {
 public:
  ParamPair(double p, double q);  // throws DomainError outside the range

  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

 private:
  double p_;
  double q_;
};

ParamPair validate(double p, double q);

// The dual index r = pq / (pq + p - q).  For fixed q it maps the admissible
// p-range bijectively onto itself and is an involution.  The denominator is
// positive everywhere on the admissible range, so no error path exists.
double dual_index(const ParamPair& pair);

// pi_{p,q}/2, the right endpoint of the principal branch of the bounded
// family.  Finite exactly when p > 1; the infinite case is carried as an
// explicit state, never as a sentinel number.
class HalfPeriod {
 public:
  static HalfPeriod finite(double value);
  static HalfPeriod infinite();

  bool is_finite() const noexcept { return value_.has_value(); }
  double value() const;                 // requires is_finite()
  double upper_bound() const noexcept;  // +infinity when infinite

 private:
  HalfPeriod() = default;
  std::optional<double> value_;
};

HalfPeriod half_period(const ParamPair& pair);

// ln Gamma(x) for x > 0 (Lanczos approximation, reflection below 1/2).
double log_gamma(double x);

// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

}  // namespace gentrig
