#pragma once

#include <complex>

namespace tra {

/// Log-gamma for complex argument (Lanczos g = 7, reflection for Re z < 1/2).
/// The imaginary part is a continuous-enough branch of arg Gamma(z); only
/// its value modulo 2*pi is meaningful.
std::complex<double> log_gamma(std::complex<double> z);

/// |Gamma(z)|; +infinity at the poles z = 0, -1, -2, ...
double abs_gamma(std::complex<double> z);

/// 1/|Gamma(z)|; exactly 0 at the poles.
double abs_reciprocal_gamma(std::complex<double> z);

/// arg Gamma(z) in (-pi, pi].
double arg_gamma(std::complex<double> z);

/// True when z is (to within a few ulps) a non-positive integer on the real axis.
bool is_gamma_pole(std::complex<double> z);

}  // namespace tra
