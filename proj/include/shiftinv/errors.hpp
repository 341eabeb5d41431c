#pragma once

#include <stdexcept>
#include <string>

namespace shiftinv {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid input: malformed documents, bad residues, mass != 1, scale limits.
/// CLI exit code 1.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An input exceeds the enumeration scale the library supports.
class ScaleExceededError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Two values bound to different group specs were combined.
class SpecMismatchError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked with its stated precondition unmet.
/// CLI exit code 1.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A containment or equality that the underlying theory guarantees failed.
/// This is a bug sentinel: it cannot fire on valid inputs unless the
/// implementation is wrong. CLI exit code 2.
class TheoremViolationError : public Error {
public:
    using Error::Error;
};

} // namespace shiftinv
