#pragma once

#include <stdexcept>
#include <string>

namespace momsynth {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree in dimension, degree or shape.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// A rational and a floating-point value met in one computation.
class BackendMismatch : public Error {
public:
    using Error::Error;
};

/// Inverse requested for a sequence outside the unit group (t_0 = 0).
class ZeroConstantTerm : public Error {
public:
    using Error::Error;
};

/// A float-backend moment solve left a residual above its bound.
class ResidualTooLarge : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

/// Panel doubling moved a quadrature result by more than the tolerance.
class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for this kernel variant.
class UnsupportedKernel : public Error {
public:
    using Error::Error;
};

/// Malformed JSON document or value.
class SchemaError : public Error {
public:
    using Error::Error;
};

} // namespace momsynth
