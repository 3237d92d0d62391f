#pragma once

#include <stdexcept>
#include <string>

namespace zr {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: wrong ranges, malformed configs, contract violations.
// The CLI maps these to exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

struct RangeError : ValidationError {
    using ValidationError::ValidationError;
};

// Evaluation at the pole s = 1.
struct PoleError : ValidationError {
    using ValidationError::ValidationError;
};

// beta != 0 where a homogeneous progression is required.
struct BetaError : ValidationError {
    using ValidationError::ValidationError;
};

// Operation applied to a resonator kind that does not support it.
struct KindError : ValidationError {
    using ValidationError::ValidationError;
};

// Resonator length violates a structural precondition.
struct ShapeError : ValidationError {
    using ValidationError::ValidationError;
};

// Work or memory budget exceeded.  The CLI maps these to exit code 3.
struct CapacityError : Error {
    using Error::Error;
};

// The configured term budget cannot reach the requested precision.
struct PrecisionUnreachable : CapacityError {
    using CapacityError::CapacityError;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace zr
