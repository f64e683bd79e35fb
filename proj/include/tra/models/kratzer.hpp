#pragma once

// Kratzer (Coulomb + inverse-square) model in the Laguerre basis
//   phi_n(r) = (lambda r)^{1+nu/2} e^{-lambda r/2} L_n^nu(lambda r),  lambda^2 = -8E.
// At fixed E the inverse-square strength beta is quantized (the PPS); the
// inverse map gives the familiar Kratzer spectrum.

#include <optional>
#include <span>
#include <vector>

#include "tra/grid_function.hpp"
#include "tra/models/types.hpp"

namespace tra::models {

inline constexpr int kDefaultTruncation = 100;
inline constexpr double kTailTolerance = 1e-10;

/// Z/r + beta/(2 r^2), plus l(l+1)/(2 r^2) when `effective` is set.
double kratzer_potential(double r, const KratzerParams& p, bool effective = false);

/// beta_k = (k+l+1+2Z/lambda)(k-l+2Z/lambda), k = 0..floor(-(1/2+2Z/lambda)).
/// Supercritical candidates are moved to `excluded`.
PpsResult kratzer_pps(double energy, double Z, int ell);

/// E_k = -(Z^2/2) / [k + 1/2 + sqrt(beta + (l+1/2)^2)]^2, k = 0..k_max.
std::vector<double> kratzer_spectrum(const KratzerParams& p, int k_max);

struct KratzerOptions {
    int truncation = kDefaultTruncation;
    /// Laguerre index of the basis; defaults to 2 sqrt(beta + (l+1/2)^2) - 1.
    std::optional<double> nu;
};

/// Continuous dual Hahn expansion coefficients of level k.
BoundState kratzer_bound_state(int k, const KratzerParams& p, const KratzerOptions& options = {});

/// Level k sampled on r_grid (all r > 0), unit-normalized; the potential
/// column holds the effective potential.
GridFunction kratzer_wavefunction(int k, const KratzerParams& p, std::span<const double> r_grid,
                                  const KratzerOptions& options = {});

}  // namespace tra::models
