#pragma once

#include <stdexcept>
#include <string>

namespace pesinlab {

/// Base class for computation failures (as opposed to invalid arguments,
/// which throw std::invalid_argument).
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Differential requested at a cone point of the sphere quotient.
struct SingularPointError : ComputationError {
    using ComputationError::ComputationError;
};

/// Orthonormal frame collapsed (stretch-factor underflow) during cocycle accumulation.
struct DegenerateFrameError : ComputationError {
    using ComputationError::ComputationError;
};

/// Direction estimate kept oscillating between window n and 2n.
struct NoConvergenceError : ComputationError {
    using ComputationError::ComputationError;
};

/// Manifold segment shrank below resolution while trimming.
struct DegenerateSegmentError : ComputationError {
    using ComputationError::ComputationError;
};

/// Holonomy leaf misses the target transversal inside the local window.
struct OutOfDomainError : ComputationError {
    using ComputationError::ComputationError;
};

/// Separation of the two orbits is unresolvable (zero or immediately saturated).
struct NotResolvableError : ComputationError {
    using ComputationError::ComputationError;
};

/// Iteration request beyond the system's configured horizon.
struct HorizonError : ComputationError {
    using ComputationError::ComputationError;
};

}  // namespace pesinlab
