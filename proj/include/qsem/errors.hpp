#pragma once

#include <stdexcept>

namespace qsem {

/// Raised when a formula cannot be evaluated against the given scenario or
/// input: unbound atom, wrong input kind for the chosen semantics, or a
/// dimension mismatch between a state and the scenario.
struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a scenario document is malformed or violates an invariant
/// (non-projector atom matrix, unnormalized state, duplicate name, ...).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qsem
