#pragma once

#include <stdexcept>

namespace fvlt {

// Base type for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Path validation.
struct NonMonotoneBreakpoints : Error { using Error::Error; };
struct ContinuityViolation : Error { using Error::Error; };
struct ZeroJump : Error { using Error::Error; };
struct DegreeTooHigh : Error { using Error::Error; };

// Queries.
struct OutOfDomain : Error { using Error::Error; };
struct ComplexLevel : Error { using Error::Error; };
struct EmptyInterval : Error { using Error::Error; };

// Fixtures, parameters, input documents.
struct UnknownFixture : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };
struct InvalidDocument : Error { using Error::Error; };

}  // namespace fvlt
