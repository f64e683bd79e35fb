#pragma once

#include <stdexcept>
#include <string>

namespace tra {

/// Parameter outside the legal domain of an operation (maps to CLI exit code 2).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A recursion coefficient that must be divided by vanished.
class DegenerateParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Inverse-square coupling at or below -(l+1/2)^2 ("fall to the center").
class SupercriticalCouplingError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Convergence or accuracy failure in a numerical routine (maps to CLI exit code 3).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expansion not converged at the requested truncation.
class TruncationError : public NumericalFailure {
public:
    TruncationError(const std::string& what, int suggested_n)
        : NumericalFailure(what), suggested_n_(suggested_n) {}

    int suggested_n() const noexcept { return suggested_n_; }

private:
    int suggested_n_;
};

/// Internal consistency check failed (e.g. eigenvalue does not match the requested one).
class InconsistentStateError : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

}  // namespace tra
