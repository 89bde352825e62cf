#pragma once

#include <stdexcept>
#include <string>

namespace extaff {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multi-index operations.
struct OverlapError : Error { using Error::Error; };
struct PositionError : Error { using Error::Error; };

// Form operations.
struct DimensionMismatch : Error { using Error::Error; };
struct GradeMismatch : Error { using Error::Error; };
struct ZeroAxisError : Error { using Error::Error; };

// Function model.
struct SignatureMismatch : Error { using Error::Error; };

// Extraction / canonical representations.
struct InconsistentError : Error { using Error::Error; };
struct DegreeViolation : Error { using Error::Error; };
struct IllDefinedAlphaError : Error { using Error::Error; };

// I/O.
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };

} // namespace extaff
