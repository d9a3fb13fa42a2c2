#pragma once

#include <stdexcept>
#include <string>

namespace projconst {

/// Matrix/vector size mismatch or empty input.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Structural violation (non-Hermitian input, rank deficiency, ...).
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold for the given state.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Requested construction/method is not available.
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Trace-duality witness fails its structural requirements.
struct InvalidWitnessError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Solver failed (infeasible LP, iteration limit, ...).
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input file does not match the expected JSON schema.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace projconst
