#pragma once

#include <stdexcept>
#include <string>

namespace mvbell {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid value in the problem domain (negative entry, dimension mismatch, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A derivative beyond the truncation order of a series was requested.
class TruncationError : public Error {
public:
    using Error::Error;
};

/// A precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// Polynomial evaluation hit a variable without an assigned value.
class MissingVariableError : public Error {
public:
    using Error::Error;
};

/// A Bell coefficient came out non-integral; the message carries the witness.
class IntegralityError : public Error {
public:
    using Error::Error;
};

/// Malformed input text (rational strings, JSON documents, CLI values).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace mvbell
