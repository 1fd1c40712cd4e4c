#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mathematically invalid input (non-prime p, Δ = 0, d ∤ n, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed a documented size bound.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// A result contradicting a proven property of Drinfeld modules. Always a bug
/// or a broken precondition upstream; never silently recovered.
class TheoryViolation : public Error {
public:
    using Error::Error;
};

}  // namespace drinfeld
