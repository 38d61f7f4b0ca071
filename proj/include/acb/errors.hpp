#pragma once

#include <stdexcept>
#include <string>

namespace acb {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape, parameter-set or invertibility problems in the input data.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// Division by the zero Scalar.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// A denominator vanished while substituting numeric parameter values.
class EvaluationError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed expression or manifold document.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Bad command-line usage or unknown example name.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace acb
