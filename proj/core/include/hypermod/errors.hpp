#pragma once

#include <stdexcept>
#include <string>

namespace hypermod {

// Input rejected while constructing a hypergraph (loops, bad weights, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition on an operation argument was violated.
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration cap (vertex count, edge count, backtracking budget) was hit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested object family is empty (e.g. hypertrees of a
// non-partition-connected hypergraph).
struct InfeasibilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnboundednessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterative solver stopped before reaching the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An internal cross-check failed (duality identity, serial-rule structure,
// greedy cover bound). Surfaces as a finding, never silently ignored.
struct ConsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two eta-levels are too close to separate at the given clustering tolerance.
struct AmbiguityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hypermod
