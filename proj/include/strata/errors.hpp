#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Malformed input document or invalid simplex data.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input outside the supported dimension range or cap.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument failed (unknown cell, index out of range).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed. Seeing one of these means the
/// library is wrong, not the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw InternalError(what);
}

} // namespace strata
