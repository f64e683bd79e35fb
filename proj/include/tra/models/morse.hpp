#pragma once

// Generalized Morse model in the Laguerre basis
//   phi_n(y) = y^{nu/2} e^{-y/2} L_n^nu(y),  y = e^{-lambda x},  (lambda nu)^2 = -8E.

#include <span>
#include <vector>

#include "tra/grid_function.hpp"
#include "tra/models/types.hpp"

namespace tra::models {

double morse_potential(double x, const MorseParams& p);

/// beta_k = -sqrt(alpha)(2k + nu + 1), nu = sqrt(-8E)/lambda, k = 0..k_max.
PpsResult morse_pps(double energy, double alpha, double lambda, int k_max);

/// E_k = -(lambda^2/8)(2k + 1 + beta/sqrt(alpha))^2 for every k with E_k < 0.
std::vector<double> morse_spectrum(const MorseParams& p);

/// sqrt(c) of the Meixner polynomials, (2 sqrt(alpha) - 1)/(2 sqrt(alpha) + 1).
double morse_meixner_sqrt_c(double alpha);

BoundState morse_bound_state(int k, const MorseParams& p, int truncation = 100);

GridFunction morse_wavefunction(int k, const MorseParams& p, std::span<const double> x_grid,
                                int truncation = 100);

}  // namespace tra::models
