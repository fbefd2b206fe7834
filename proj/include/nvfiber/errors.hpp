#pragma once

#include <stdexcept>
#include <string>

namespace nvfiber {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validation of inputs/config (CLI exit code 2).
struct ValidationError : Error { using Error::Error; };

// Numerical failures (CLI exit code 3).
struct NoGuidedMode : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };
struct QuadratureNotConverged : Error { using Error::Error; };
struct ZeroNormalization : Error { using Error::Error; };
struct DegenerateDesign : Error { using Error::Error; };
struct EmptySpectrum : Error { using Error::Error; };

// File-format violations (CLI exit code 4). Carries the byte offset of
// the first offending byte.
struct FormatError : Error {
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

}  // namespace nvfiber
