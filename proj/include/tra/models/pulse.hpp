#pragma once

// Hyperbolic pulse model in the Jacobi basis
//   phi_n(y) = (1 - y^2)^{mu/2} P_n^{(mu,mu)}(y),  y = tanh(lambda x),  (lambda mu)^2 = -2E.
// No closed form exists for the spectrum of the associated polynomials, so
// the PPS and the energies come from the symmetrized recursion matrix.

#include <span>
#include <vector>

#include "tra/grid_function.hpp"
#include "tra/models/types.hpp"

namespace tra::models {

enum class AmplitudeSign { positive, negative };

double pulse_potential(double x, const PulseParams& p);

/// max_x |V(x)|, from the stationary points of (B + A t)(1 - t^2).
double pulse_depth(const PulseParams& p);

struct PulsePpsOptions {
    int truncation = 200;
    int count = 4;
    AmplitudeSign sign = AmplitudeSign::positive;
    double stability_tolerance = 1e-9;  ///< relative, N against 2N
};

/// The `count` values of A with smallest |A| (and the requested sign) for which
/// E is a bound-state energy at fixed B/A.
PpsResult pulse_pps(double energy, double b_over_a, double lambda, const PulsePpsOptions& options = {});

struct PulseSpectrumOptions {
    int truncation = 100;
    double mu_min = 1e-3;
    double mu_step = 0.02;
    double d_perturbation = 0.0;  ///< sensitivity hook, see build_pulse_matrix
};

/// Every mu > 0 at which some eigenvalue of the recursion matrix equals -1/A,
/// sorted descending (ground state first).
std::vector<double> pulse_basis_roots(const PulseParams& p, const PulseSpectrumOptions& options = {});

/// Bound-state energies, most bound first.
std::vector<double> pulse_spectrum(const PulseParams& p, const PulseSpectrumOptions& options = {});

BoundState pulse_bound_state(int k, const PulseParams& p, const PulseSpectrumOptions& options = {});

GridFunction pulse_wavefunction(int k, const PulseParams& p, std::span<const double> x_grid,
                                const PulseSpectrumOptions& options = {});

}  // namespace tra::models
