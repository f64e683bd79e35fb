#include "tra/models/morse.hpp"

#include <cmath>
#include <string>

#include "series.hpp"
#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"

namespace tra::models {

namespace {

// Relative slack for the zero-energy edge 2k + 1 + beta/sqrt(alpha) = 0.
constexpr double kEdgeTolerance = 1e-12;

void require_alpha(double alpha) {
    if (!(alpha > 0.25)) {
        throw DomainError("generalized Morse requires alpha > 1/4");
    }
}

void require_lambda(double lambda) {
    if (!(lambda > 0.0)) {
        throw DomainError("range parameter lambda must be positive");
    }
}

void require_params(const MorseParams& p) {
    require_alpha(p.alpha);
    require_lambda(p.lambda);
    if (!std::isfinite(p.beta)) {
        throw DomainError("beta must be finite");
    }
}

// nu_k = -(2k + 1 + beta/sqrt(alpha)); positive exactly for the bound levels.
double basis_index(int k, const MorseParams& p) {
    return -(2.0 * k + 1.0 + p.beta / std::sqrt(p.alpha));
}

bool is_bound(int k, const MorseParams& p) {
    const double ratio = p.beta / std::sqrt(p.alpha);
    return basis_index(k, p) > kEdgeTolerance * (1.0 + std::abs(ratio));
}

}  // namespace

double morse_potential(double x, const MorseParams& p) {
    const double e = std::exp(-p.lambda * x);
    return 0.5 * p.lambda * p.lambda * e * (p.alpha * e + p.beta);
}

PpsResult morse_pps(double energy, double alpha, double lambda, int k_max) {
    if (!(energy < 0.0)) {
        throw DomainError("Morse PPS requires E < 0");
    }
    require_alpha(alpha);
    require_lambda(lambda);
    if (k_max < 0) {
        throw DomainError("k_max must be non-negative");
    }
    PpsResult result;
    result.model = ModelKind::morse;
    result.energy = energy;
    result.truncation = k_max;
    const double nu = std::sqrt(-8.0 * energy) / lambda;
    const double root_alpha = std::sqrt(alpha);
    for (int k = 0; k <= k_max; ++k) {
        result.entries.push_back({k, -root_alpha * (2.0 * k + nu + 1.0)});
    }
    return result;
}

std::vector<double> morse_spectrum(const MorseParams& p) {
    require_params(p);
    std::vector<double> energies;
    const double scale = p.lambda * p.lambda / 8.0;
    for (int k = 0; is_bound(k, p); ++k) {
        const double nu = basis_index(k, p);
        energies.push_back(-scale * nu * nu);
    }
    return energies;
}

double morse_meixner_sqrt_c(double alpha) {
    require_alpha(alpha);
    const double r = 2.0 * std::sqrt(alpha);
    return (r - 1.0) / (r + 1.0);
}

BoundState morse_bound_state(int k, const MorseParams& p, int truncation) {
    require_params(p);
    if (k < 0 || !is_bound(k, p)) {
        throw DomainError("level k = " + std::to_string(k) + " is not in the Morse spectrum");
    }
    if (truncation < 20) {
        throw DomainError("Morse expansion needs N >= 20");
    }
    BoundState state;
    state.k = k;
    state.basis_scale = basis_index(k, p);
    state.energy = -p.lambda * p.lambda * state.basis_scale * state.basis_scale / 8.0;
    const double root_c = morse_meixner_sqrt_c(p.alpha);
    orthopoly::MeixnerParams meixner;
    meixner.gamma = state.basis_scale + 1.0;
    meixner.c = root_c * root_c;
    meixner.k = k;
    state.coefficients = orthopoly::meixner_mod_sequence(truncation, meixner);
    detail::require_converged_tail(state.coefficients, "Morse");
    return state;
}

GridFunction morse_wavefunction(int k, const MorseParams& p, std::span<const double> x_grid, int truncation) {
    const BoundState state = morse_bound_state(k, p, truncation);
    const double nu = state.basis_scale;
    GridFunction out;
    out.energy = state.energy;
    out.x.assign(x_grid.begin(), x_grid.end());
    out.psi.resize(out.x.size());
    out.potential.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        const double log_y = -p.lambda * out.x[i];
        const double y = std::exp(log_y);
        out.potential[i] = morse_potential(out.x[i], p);
        out.psi[i] = detail::laguerre_series(state.coefficients, nu, y, 0.5 * nu * log_y - 0.5 * y);
    }
    out.normalization = normalize(out.x, out.psi);
    return out;
}

}  // namespace tra::models
