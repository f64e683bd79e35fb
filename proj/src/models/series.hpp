#pragma once

#include <span>

#include "tra/orthopoly.hpp"

namespace tra::models::detail {

/// exp(log_prefactor) * sum_n coeffs[n] L_n^nu(x), rescaled internally so the
/// Laguerre values may exceed the double range.
double laguerre_series(std::span<const double> coeffs, double nu, double x, double log_prefactor);

/// sum_n coeffs[n] P_n(y) for the Jacobi family whose recursion table is given
/// (table.size() >= coeffs.size()).
double jacobi_series(std::span<const double> coeffs, std::span<const orthopoly::JacobiRecursionCoeffs> table,
                     double y);

/// Throws TruncationError when |f_{N-1}| / max|f_n| exceeds the tail tolerance.
void require_converged_tail(std::span<const double> coeffs, const char* model);

}  // namespace tra::models::detail
