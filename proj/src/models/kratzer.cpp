#include "tra/models/kratzer.hpp"

#include <cmath>
#include <string>

#include "series.hpp"
#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"

namespace tra::models {

namespace {

double critical_shift(int ell) { return (ell + 0.5) * (ell + 0.5); }

void require_ell(int ell) {
    if (ell < 0) {
        throw DomainError("angular momentum must satisfy l >= 0");
    }
}

void require_bound_domain(const KratzerParams& p) {
    require_ell(p.ell);
    if (!(p.Z < 0.0)) {
        throw DomainError("Kratzer bound states require Z < 0");
    }
    if (!(p.beta > -critical_shift(p.ell))) {
        throw SupercriticalCouplingError("supercritical inverse-square coupling: need beta > -(l+1/2)^2 = " +
                                         std::to_string(-critical_shift(p.ell)));
    }
}

// sqrt(beta + (l+1/2)^2): the small-r exponent is 1/2 plus this.
double effective_root(const KratzerParams& p) { return std::sqrt(p.beta + critical_shift(p.ell)); }

double level_energy(const KratzerParams& p, int k) {
    const double denom = k + 0.5 + effective_root(p);
    return -0.5 * p.Z * p.Z / (denom * denom);
}

}  // namespace

double kratzer_potential(double r, const KratzerParams& p, bool effective) {
    if (!(r > 0.0)) {
        throw DomainError("Kratzer potential requires r > 0");
    }
    const double inv_r = 1.0 / r;
    double v = p.Z * inv_r + 0.5 * p.beta * inv_r * inv_r;
    if (effective) {
        v += 0.5 * p.ell * (p.ell + 1.0) * inv_r * inv_r;
    }
    return v;
}

PpsResult kratzer_pps(double energy, double Z, int ell) {
    if (!(energy < 0.0)) {
        throw DomainError("Kratzer PPS requires E < 0");
    }
    require_ell(ell);
    PpsResult result;
    result.model = ModelKind::kratzer;
    result.energy = energy;
    const double lambda = std::sqrt(-8.0 * energy);
    const double t = 2.0 * Z / lambda;
    const double cap = -(0.5 + t);
    if (cap < 0.0) {
        result.truncation = -1;
        result.status = "empty: Z > -lambda/4 (need Z <= " + std::to_string(-lambda / 4.0) + ")";
        return result;
    }
    const int n_cap = static_cast<int>(std::floor(cap));
    result.truncation = n_cap;
    for (int k = 0; k <= n_cap; ++k) {
        const double beta = (k + ell + 1.0 + t) * (k - ell + t);
        if (beta > -critical_shift(ell)) {
            result.entries.push_back({k, beta});
        } else {
            result.excluded.push_back({k, beta});
        }
    }
    if (!result.excluded.empty()) {
        result.status = "excluded supercritical values beta <= -(l+1/2)^2";
    }
    return result;
}

std::vector<double> kratzer_spectrum(const KratzerParams& p, int k_max) {
    require_bound_domain(p);
    if (k_max < 0) {
        throw DomainError("k_max must be non-negative");
    }
    std::vector<double> energies;
    energies.reserve(static_cast<std::size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k) {
        energies.push_back(level_energy(p, k));
    }
    return energies;
}

BoundState kratzer_bound_state(int k, const KratzerParams& p, const KratzerOptions& options) {
    require_bound_domain(p);
    if (k < 0) {
        throw DomainError("level index must be non-negative");
    }
    if (options.truncation < 20) {
        throw DomainError("Kratzer expansion needs N >= 20");
    }
    const double nu = options.nu.value_or(2.0 * effective_root(p) - 1.0);
    if (!(nu > -1.0)) {
        throw DomainError("Laguerre basis index must satisfy nu > -1");
    }
    BoundState state;
    state.k = k;
    state.energy = level_energy(p, k);
    state.basis_scale = std::sqrt(-8.0 * state.energy);
    const double alpha = 2.0 * p.Z / state.basis_scale;
    orthopoly::CdhParams cdh;
    cdh.a = 0.5 * (nu + 1.0);
    cdh.b = cdh.a;
    cdh.c = alpha + 0.5;
    cdh.z2 = -(k + cdh.c) * (k + cdh.c);
    state.coefficients = orthopoly::cdh_sequence(options.truncation, cdh);
    detail::require_converged_tail(state.coefficients, "Kratzer");
    return state;
}

GridFunction kratzer_wavefunction(int k, const KratzerParams& p, std::span<const double> r_grid,
                                  const KratzerOptions& options) {
    BoundState state = kratzer_bound_state(k, p, options);
    const double nu = options.nu.value_or(2.0 * effective_root(p) - 1.0);
    const double lambda = state.basis_scale;
    GridFunction out;
    out.energy = state.energy;
    out.x.assign(r_grid.begin(), r_grid.end());
    out.psi.resize(out.x.size());
    out.potential.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        const double r = out.x[i];
        out.potential[i] = kratzer_potential(r, p, true);
        const double x = lambda * r;
        const double log_prefactor = (1.0 + 0.5 * nu) * std::log(x) - 0.5 * x;
        out.psi[i] = detail::laguerre_series(state.coefficients, nu, x, log_prefactor);
    }
    out.normalization = normalize(out.x, out.psi);
    return out;
}

}  // namespace tra::models
