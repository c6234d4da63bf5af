#pragma once

#include <stdexcept>
#include <string>

namespace swfam {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Ring/algebra misuse: mismatched generator sets, zero denominators,
/// non-unit constant terms and the like.
struct AlgebraError : Error {
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number when known.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

/// A model or argument violates a named invariant.
struct ValidationError : Error {
    using Error::Error;
};

/// Two independent computation routes disagree.
struct CrossCheckError : Error {
    using Error::Error;
};

} // namespace swfam
