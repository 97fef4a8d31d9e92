#pragma once

#include <stdexcept>
#include <string>

namespace shqmm {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix/vector dimensions do not line up.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A value violates a documented precondition (symbol out of range,
// probability vector off the simplex, malformed hyperparameters, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// Numeric failures: a branch probability collapsed below the underflow
// floor, or a linear system inside an update became singular.
class NumericError : public Error {
public:
    using Error::Error;
};

// Step trace / branch probability below the representable floor; signals
// an impossible symbol rather than silently producing -inf or NaN.
class UnderflowError : public NumericError {
public:
    using NumericError::NumericError;
};

// The Cayley step's inner linear system was singular even after retries.
class StepFailureError : public NumericError {
public:
    using NumericError::NumericError;
};

// File could not be read/written.
class IoError : public Error {
public:
    using Error::Error;
};

// File contents could not be parsed; message carries the line number.
class ParseError : public IoError {
public:
    using IoError::IoError;
};

}  // namespace shqmm
