#pragma once

#include <stdexcept>
#include <string>

namespace idforge {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arithmetic outside its domain (division by zero, 0^-k, singular inverse).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// t = 0 in the normalized weighted-sum theorem.
class DegenerateRatioError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// X_k or X_{k-1} vanishes, so offset k cannot seed a weighted-sum identity.
class OffsetInvalidError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class VersionError : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace idforge
