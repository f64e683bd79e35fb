#pragma once

// Orthogonal polynomials evaluated by upward three-term recursion.
//
// Every routine here is a pure function. Closed-form hypergeometric sums are
// deliberately absent: they live in the test oracles only.

#include <vector>

namespace tra::orthopoly {

/// Continuous dual Hahn parameters, S_n(z2; a, b, c) with z2 = z^2.
/// The discrete-spectrum branch has z2 < 0.
struct CdhParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double z2 = 0.0;
};

/// Modified Meixner parameters for c^{n/2} M_n(k; gamma, c).
struct MeixnerParams {
    double gamma = 1.0;  ///< > 0
    double c = 0.5;      ///< in (0, 1)
    int k = 0;           ///< lattice point, >= 0
};

/// Jacobi recursion written as y P_n = C P_n + D P_{n-1} + G P_{n+1},
/// together with the quantities used to symmetrize the pulse recursion.
struct JacobiRecursionCoeffs {
    double C = 0.0;
    double D = 0.0;  ///< 0 at n = 0 (there is no P_{-1})
    double G = 0.0;
    double Q = 0.0;  ///< (n + (mu+nu+1)/2)^2 - 1/4
    double R = 1.0;  ///< cumulative rescaling, R_0 = 1
    double F = 1.0;  ///< cumulative symmetrizing scale, F_0 = 1
};

/// Rising factorial (a)_n by direct product.
double pochhammer(double a, int n);

/// L_n^nu(x). Throws DomainError for nu <= -1 or n < 0.
double laguerre_eval(int n, double nu, double x);

/// P_n^{(mu,nu)}(y). Throws DomainError for mu <= -1, nu <= -1 or n < 0.
double jacobi_eval(int n, double mu, double nu, double y);

/// ((mu+1)_n / (2mu+1)_n) C_n^{(mu+1/2)}(y), which is exactly P_n^{(mu,mu)}(y).
double gegenbauer_via_jacobi(int n, double mu, double y);

/// S_n(z2; a, b, c) in the 3F2 normalization (S_0 = 1).
/// Throws DegenerateParameterError when (m+a+b)(m+a+c) vanishes for some m < n.
double cdh_eval(int n, const CdhParams& params);

/// S_0 .. S_{count-1}. When the forward coefficient (m+a+b)(m+a+c) vanishes and
/// row m of the recursion is satisfied by the values already computed, the
/// sequence terminates there (S_n = 0 for n > m), which is the square-summable
/// solution. A vanishing coefficient with an inconsistent row throws
/// DegenerateParameterError.
std::vector<double> cdh_sequence(int count, const CdhParams& params);

/// Large-n amplitude of S_n without the n^{-a} factor:
///   2 Gamma(b+c) |Gamma(2iz)| / |Gamma(a+iz) Gamma(b+iz) Gamma(c+iz)|.
/// Requires z > 0.
double cdh_asymptotic_amplitude(double z, double a, double b, double c);

/// Phase of the large-n oscillation, arg[Gamma(2iz) / Gamma(a+iz)Gamma(b+iz)Gamma(c+iz)],
/// so that S_n ~ (amplitude) n^{-a} cos(z ln n + phase) up to normalization.
double cdh_asymptotic_phase(double z, double a, double b, double c);

/// c^{n/2} M_n(k; gamma, c).
double meixner_mod_eval(int n, const MeixnerParams& params);

/// c^{n/2} M_n(k; gamma, c) for n = 0 .. count-1.
std::vector<double> meixner_mod_sequence(int count, const MeixnerParams& params);

/// Coefficients at index n (R_n and F_n accumulate from 0).
JacobiRecursionCoeffs jacobi_recursion_coeffs(int n, double mu, double nu);

/// Coefficients for n = 0 .. count-1 in one pass.
std::vector<JacobiRecursionCoeffs> jacobi_recursion_table(int count, double mu, double nu);

}  // namespace tra::orthopoly
