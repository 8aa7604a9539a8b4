#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cms {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expression syntax error. `offset` is a 0-based byte offset into the source.
struct ParseError : Error {
    std::size_t offset;
    std::string expected;

    ParseError(const std::string& msg, std::size_t offset_, std::string expected_)
        : Error(msg + " at offset " + std::to_string(offset_) +
                (expected_.empty() ? "" : " (expected " + expected_ + ")")),
          offset(offset_),
          expected(std::move(expected_)) {}
};

/// Numeric domain error during expression evaluation (log of non-positive,
/// division by zero, non-finite result).
struct EvalError : Error {
    using Error::Error;
};

/// Structural problem in a system configuration.
struct ConfigError : Error {
    using Error::Error;
};

/// Numeric validation failure (stochasticity defect, region mapping, ...).
struct ValidationError : Error {
    using Error::Error;
};

}  // namespace cms
