#pragma once

#include <stdexcept>
#include <string>

namespace mss {

// Error hierarchy. Every failure mode of the library maps to one of these;
// the CLI translates SolverError -> exit 2 and ValidationError -> exit 3.

class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public ValidationError {
public:
    explicit ParseError(const std::string& msg) : ValidationError(msg) {}
};

class SeparationViolation : public ValidationError {
public:
    explicit SeparationViolation(const std::string& msg) : ValidationError(msg) {}
};

class NonPositiveRadius : public ValidationError {
public:
    explicit NonPositiveRadius(const std::string& msg) : ValidationError(msg) {}
};

class OutsideTubularNeighborhood : public SolverError {
public:
    explicit OutsideTubularNeighborhood(const std::string& msg) : SolverError(msg) {}
};

class InsufficientTimeSamples : public ValidationError {
public:
    explicit InsufficientTimeSamples(const std::string& msg) : ValidationError(msg) {}
};

class InvalidConfig : public ValidationError {
public:
    explicit InvalidConfig(const std::string& msg) : ValidationError(msg) {}
};

class BackendResolutionTooLow : public SolverError {
public:
    explicit BackendResolutionTooLow(const std::string& msg) : SolverError(msg) {}
};

class NonCircularGeometry : public SolverError {
public:
    explicit NonCircularGeometry(const std::string& msg) : SolverError(msg) {}
};

class CompatibilityViolated : public SolverError {
public:
    explicit CompatibilityViolated(const std::string& msg) : SolverError(msg) {}
};

class CoercivityViolated : public ValidationError {
public:
    explicit CoercivityViolated(const std::string& msg) : ValidationError(msg) {}
};

class SingularForm : public SolverError {
public:
    explicit SingularForm(const std::string& msg) : SolverError(msg) {}
};

class PowerIterationStall : public SolverError {
public:
    explicit PowerIterationStall(const std::string& msg) : SolverError(msg) {}
};

class ExtrapolationDisagreement : public SolverError {
public:
    explicit ExtrapolationDisagreement(const std::string& msg) : SolverError(msg) {}
};

class ImplicitSolveFailed : public SolverError {
public:
    explicit ImplicitSolveFailed(const std::string& msg) : SolverError(msg) {}
};

class StepsizeTooLarge : public SolverError {
public:
    explicit StepsizeTooLarge(const std::string& msg) : SolverError(msg) {}
};

} // namespace mss
