#pragma once

#include <cstddef>
#include <vector>

namespace tra::spectral {

/// Symmetric tridiagonal matrix: diag has N entries, offdiag N-1.
struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> offdiag;

    std::size_t size() const noexcept { return diag.size(); }

    /// Throws DomainError unless N >= 1, offdiag has N-1 entries and all are finite.
    void validate() const;

    /// max_i sum_j |m_ij|
    double norm_inf() const;
};

/// General (possibly nonsymmetric) tridiagonal matrix, lower[i] = m(i+1, i), upper[i] = m(i, i+1).
struct Tridiag {
    std::vector<double> diag;
    std::vector<double> lower;
    std::vector<double> upper;
};

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;  ///< unit Euclidean norm
};

/// Which eigenvalues to return.
class EigenSelection {
public:
    enum class Kind { all, lowest, in_interval };

    static EigenSelection all() { return EigenSelection(Kind::all, 0, 0.0, 0.0); }
    static EigenSelection lowest(std::size_t count) { return EigenSelection(Kind::lowest, count, 0.0, 0.0); }
    /// Eigenvalues in [lo, hi).
    static EigenSelection in_interval(double lo, double hi) { return EigenSelection(Kind::in_interval, 0, lo, hi); }

    Kind kind() const noexcept { return kind_; }
    std::size_t count() const noexcept { return count_; }
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    EigenSelection(Kind kind, std::size_t count, double lo, double hi)
        : kind_(kind), count_(count), lo_(lo), hi_(hi) {}

    Kind kind_;
    std::size_t count_;
    double lo_;
    double hi_;
};

/// Number of eigenvalues strictly below x (Sturm sequence of leading minors).
std::size_t sturm_count(const SymTridiag& m, double x);

/// Gershgorin interval [lo, hi] containing the spectrum.
std::pair<double, double> gershgorin_bounds(const SymTridiag& m);

/// Eigenvalue number `index` (0-based, ascending) by bisection.
double sym_tridiag_eigenvalue(const SymTridiag& m, std::size_t index);

/// Sorted eigenvalues by Sturm bisection. Each is resolved to the limit of the
/// bisection, which is well inside 1e-13 * max(1, ||m||_inf).
std::vector<double> sym_tridiag_eigenvalues(const SymTridiag& m,
                                            const EigenSelection& which = EigenSelection::all());

/// Inverse-iteration eigenvector for an approximate eigenvalue. The returned
/// value is the Rayleigh quotient; the vector has unit norm and its first
/// non-negligible component is positive. Throws NumericalFailure when the
/// scaled residual does not reach 1e-10 within 50 iterations.
EigenPair sym_tridiag_eigenvector(const SymTridiag& m, double value);

/// Symmetrized Jacobi-basis recursion of the hyperbolic pulse problem. Its
/// eigenvalues are the admissible values of -1/A at fixed (mu, nu, B/A).
/// `d_perturbation` scales every D_n by (1 + d_perturbation); it exists only
/// as a sensitivity hook for the verification suite.
SymTridiag build_pulse_matrix(double mu, double nu, double b_over_a, int n, double d_perturbation = 0.0);

/// The same recursion before symmetrization (diagonal divided by Q_n).
Tridiag build_pulse_companion(double mu, double nu, double b_over_a, int n);

/// Test oracle: roots of the characteristic polynomial recurrence, bracketed
/// by interlacing with the leading principal submatrix. N <= 12.
std::vector<double> dense_eig_bruteforce(const SymTridiag& m);

/// As above for a tridiagonal with lower[i] * upper[i] >= 0 (real spectrum).
std::vector<double> dense_eig_bruteforce(const Tridiag& m);

}  // namespace tra::spectral
