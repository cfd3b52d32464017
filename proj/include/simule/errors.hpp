#ifndef SIMULE_ERRORS_HPP
#define SIMULE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simule {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Caller violated a contract (bad dimensions, bad flag values).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

// Input data is malformed (ragged CSV, too few samples, shape mismatch).
class DataError : public Error {
public:
    explicit DataError(const std::string& msg) : Error(msg) {}
};

// A matrix required to be positive definite is not.
class NotPositiveDefinite : public Error {
public:
    explicit NotPositiveDefinite(const std::string& msg) : Error(msg) {}
};

// A numeric kernel failed to converge within its iteration cap.
class SolverError : public Error {
public:
    explicit SolverError(const std::string& msg) : Error(msg) {}
};

// The joint estimation produced no usable columns.
class EstimationError : public Error {
public:
    explicit EstimationError(const std::string& msg) : Error(msg) {}
};

// A sweep produced no usable points.
class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& msg) : Error(msg) {}
};

}  // namespace simule

#endif
