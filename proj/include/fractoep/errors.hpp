#pragma once

#include <stdexcept>
#include <string>

namespace fractoep {

// Bad input: violated precondition, Gamma pole, malformed function id.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The inputs were fine but the numerics did not deliver.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class PoleError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class ConvergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class QuadratureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SingularMatrixError : public NumericalError {
public:
    SingularMatrixError(const std::string& what, double condition)
        : NumericalError(what), condition_(condition) {}
    double condition() const { return condition_; }

private:
    double condition_;
};

}  // namespace fractoep
