#pragma once

#include <stdexcept>
#include <string>

namespace magnomech {

/// Parameter combination puts the solver on a pole of a closed-form
/// expression (vanishing denominator, zero detuning where one is divided by).
class SingularConfigurationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Mutually inconsistent inputs (e.g. a coupling that implies a drive the
/// other parameters rule out).
class InconsistentParametersError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative solver ran out of iterations; carries the last residual so
/// callers can judge how close it got.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double last_residual)
        : std::runtime_error(what), last_residual_(last_residual) {}
    double last_residual() const noexcept { return last_residual_; }

private:
    double last_residual_;
};

/// A steady-state computation was requested for dynamics that do not decay.
class StabilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure inside dense linear algebra (non-convergent eigensolver,
/// singular linear system, eigenvalues that refuse to pair up).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Root-bracketing precondition failed; message names the offending endpoint.
class BracketError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace magnomech
