#pragma once

#include <stdexcept>
#include <string>

namespace coalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// An argument violates a precondition (not an ideal, not a subcoalgebra, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same object disagreed. Never a valid
/// outcome: it signals a defect in one of the two routes.
class CrossCheckFailure : public Error {
public:
    using Error::Error;
};

class UnsupportedCharacteristic : public Error {
public:
    using Error::Error;
};

/// Malformed input. The message carries a position: line:column for syntax
/// errors, a JSON pointer for structural ones.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace coalg
