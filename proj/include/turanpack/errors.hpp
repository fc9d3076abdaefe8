#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace turanpack {

// Base class for all library errors. Callers that only need "did it fail"
// can catch this; the CLI maps subclasses to machine-readable error objects.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Size guard exceeded (enumeration spaces, pattern caps). Raisable only with
// an explicit override at the call site that owns the guard.
class GuardError : public Error {
public:
    using Error::Error;
};

// Malformed input text. `offset` is the byte position of the first offending
// byte in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// A computed value would not fit in 64 bits.
class OverflowError : public Error {
public:
    using Error::Error;
};

} // namespace turanpack
