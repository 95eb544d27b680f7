#pragma once

#include <stdexcept>

namespace gentrig {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An iteration or refinement budget ran out before the requested tolerance
// was met.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value left the supported range: divergent tangent-type quotients, or
// hyperbolic values past the 1e12 reporting cap.
class OverflowSignal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gentrig
