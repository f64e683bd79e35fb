#include "tra/models/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "series.hpp"
#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"
#include "tra/spectral.hpp"

namespace tra::models {

namespace {

constexpr int kMinSpectrumTruncation = 2;
constexpr int kMinPpsTruncation = 30;
// Relative agreement required between the requested -1/A and the matched eigenvalue.
constexpr double kEigenMatchTolerance = 1e-8;

void require_params(const PulseParams& p) {
    if (!(p.lambda > 0.0)) {
        throw DomainError("range parameter lambda must be positive");
    }
    if (p.A == 0.0 || !std::isfinite(p.A) || !std::isfinite(p.B)) {
        throw DomainError("pulse amplitude A must be finite and non-zero");
    }
    if (std::abs(p.B / p.A) > 1.0) {
        throw DomainError("pulse requires |B/A| <= 1");
    }
}

void require_spectrum_options(const PulseSpectrumOptions& o) {
    if (o.truncation < kMinSpectrumTruncation) {
        throw DomainError("pulse spectrum needs N >= 2");
    }
    if (!(o.mu_min > 0.0) || !(o.mu_step > 0.0)) {
        throw DomainError("mu scan needs mu_min > 0 and mu_step > 0");
    }
}

spectral::SymTridiag matrix_at(double mu, const PulseParams& p, const PulseSpectrumOptions& o) {
    return spectral::build_pulse_matrix(mu, mu, p.B / p.A, o.truncation, o.d_perturbation);
}

// Number of eigenvalues below -1/A. Each unit step in this count as mu moves
// is one crossing, i.e. one root.
std::size_t crossings_below(double mu, const PulseParams& p, const PulseSpectrumOptions& o) {
    return spectral::sturm_count(matrix_at(mu, p, o), -1.0 / p.A);
}

// Bisects [lo, hi] down to adjacent doubles, splitting where the count
// jumps by more than one.
void collect_roots(double lo, std::size_t count_lo, double hi, std::size_t count_hi, const PulseParams& p,
                   const PulseSpectrumOptions& o, std::vector<double>& roots) {
    if (count_lo == count_hi) return;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
        roots.push_back(mid);
        return;
    }
    const std::size_t count_mid = crossings_below(mid, p, o);
    collect_roots(lo, count_lo, mid, count_mid, p, o, roots);
    collect_roots(mid, count_mid, hi, count_hi, p, o, roots);
}

}  // namespace

double pulse_potential(double x, const PulseParams& p) {
    const double t = std::tanh(p.lambda * x);
    const double sech = 1.0 / std::cosh(p.lambda * x);
    return 0.5 * p.lambda * p.lambda * (p.B + p.A * t) * sech * sech;
}

double pulse_depth(const PulseParams& p) {
    auto shape = [&](double t) { return std::abs((p.B + p.A * t) * (1.0 - t * t)); };
    double best = shape(0.0);
    if (p.A != 0.0) {
        const double disc = std::sqrt(4.0 * p.B * p.B + 12.0 * p.A * p.A);
        for (double root : {(-2.0 * p.B + disc) / (6.0 * p.A), (-2.0 * p.B - disc) / (6.0 * p.A)}) {
            if (std::abs(root) <= 1.0) best = std::max(best, shape(root));
        }
    }
    return 0.5 * p.lambda * p.lambda * best;
}

PpsResult pulse_pps(double energy, double b_over_a, double lambda, const PulsePpsOptions& options) {
    if (!(energy < 0.0)) {
        throw DomainError("pulse PPS requires E < 0");
    }
    if (!(lambda > 0.0)) {
        throw DomainError("range parameter lambda must be positive");
    }
    if (!(std::abs(b_over_a) <= 1.0)) {
        throw DomainError("pulse requires |B/A| <= 1");
    }
    if (options.truncation < kMinPpsTruncation) {
        throw DomainError("pulse PPS needs N >= 30");
    }
    if (options.count < 1) {
        throw DomainError("count must be positive");
    }
    const double mu = std::sqrt(-2.0 * energy) / lambda;
    const bool positive = options.sign == AmplitudeSign::positive;

    // Smallest |A| of the requested sign comes from the largest |eps| of the opposite sign.
    // Negating the diagonal (off-diagonal signs do not affect the spectrum) lets
    // both branches take the lowest eigenvalues.
    auto extreme = [&](int n) {
        auto m = spectral::build_pulse_matrix(mu, mu, b_over_a, n);
        if (!positive) {
            for (double& d : m.diag) d = -d;
        }
        const auto eig =
            spectral::sym_tridiag_eigenvalues(m, spectral::EigenSelection::lowest(static_cast<std::size_t>(options.count)));
        const double floor = 1e-14 * std::max(1.0, m.norm_inf());
        std::vector<double> picked;
        for (double e : eig) {
            if (e < -floor) picked.push_back(positive ? e : -e);
        }
        return picked;
    };

    const auto coarse = extreme(options.truncation);
    const auto fine = extreme(2 * options.truncation);

    PpsResult result;
    result.model = ModelKind::pulse;
    result.energy = energy;
    result.truncation = options.truncation;
    for (std::size_t j = 0; j < coarse.size(); ++j) {
        const double a = -1.0 / coarse[j];
        if (j >= fine.size()) {
            throw TruncationError("pulse PPS: branch " + std::to_string(j) + " missing at 2N",
                                  2 * options.truncation);
        }
        const double a_fine = -1.0 / fine[j];
        if (std::abs(a - a_fine) > options.stability_tolerance * std::abs(a_fine)) {
            throw TruncationError("pulse PPS: A_" + std::to_string(j) + " not stable under N -> 2N", 2 * options.truncation);
        }
        result.entries.push_back({static_cast<int>(j), a});
    }
    if (result.entries.size() < static_cast<std::size_t>(options.count)) {
        result.status = "only " + std::to_string(result.entries.size()) + " values of the requested sign";
    }
    return result;
}

std::vector<double> pulse_basis_roots(const PulseParams& p, const PulseSpectrumOptions& options) {
    require_params(p);
    require_spectrum_options(options);
    const double mu_max = std::sqrt(2.0 * pulse_depth(p)) / p.lambda + 2.0;
    std::vector<double> roots;
    double lo = options.mu_min;
    std::size_t count_lo = crossings_below(lo, p, options);
    while (lo < mu_max) {
        const double hi = std::min(lo + options.mu_step, mu_max);
        const std::size_t count_hi = crossings_below(hi, p, options);
        collect_roots(lo, count_lo, hi, count_hi, p, options, roots);
        lo = hi;
        count_lo = count_hi;
    }
    std::sort(roots.begin(), roots.end(), std::greater<>());
    return roots;
}

std::vector<double> pulse_spectrum(const PulseParams& p, const PulseSpectrumOptions& options) {
    const auto roots = pulse_basis_roots(p, options);
    std::vector<double> energies;
    energies.reserve(roots.size());
    for (double mu : roots) {
        const double lm = p.lambda * mu;
        energies.push_back(-0.5 * lm * lm);
    }
    return energies;
}

BoundState pulse_bound_state(int k, const PulseParams& p, const PulseSpectrumOptions& options) {
    const auto roots = pulse_basis_roots(p, options);
    if (k < 0 || static_cast<std::size_t>(k) >= roots.size()) {
        throw DomainError("level k = " + std::to_string(k) + " is not in the pulse spectrum (" +
                          std::to_string(roots.size()) + " levels)");
    }
    const double mu = roots[static_cast<std::size_t>(k)];
    const auto m = matrix_at(mu, p, options);
    const double target = -1.0 / p.A;
    const auto eig = spectral::sym_tridiag_eigenvalues(m);
    const auto nearest = std::min_element(eig.begin(), eig.end(), [&](double x, double y) {
        return std::abs(x - target) < std::abs(y - target);
    });
    if (std::abs(*nearest - target) > kEigenMatchTolerance * std::max(1.0, std::abs(target))) {
        throw InconsistentStateError("pulse: no eigenvalue matches -1/A at the located mu");
    }
    const auto pair = spectral::sym_tridiag_eigenvector(m, *nearest);
    const auto table = orthopoly::jacobi_recursion_table(options.truncation, mu, mu);

    BoundState state;
    state.k = k;
    state.basis_scale = mu;
    state.energy = -0.5 * (p.lambda * mu) * (p.lambda * mu);
    state.coefficients.resize(pair.vector.size());
    double biggest = 0.0;
    for (std::size_t n = 0; n < pair.vector.size(); ++n) {
        state.coefficients[n] = pair.vector[n] / table[n].F;
        biggest = std::max(biggest, std::abs(state.coefficients[n]));
    }
    // f_0 = 1 unless f_0 is negligible, in which case the largest coefficient is scaled to 1.
    const double f0 = state.coefficients[0];
    const double pivot = std::abs(f0) > 1e-8 * biggest ? f0 : biggest;
    for (double& c : state.coefficients) c /= pivot;
    detail::require_converged_tail(state.coefficients, "pulse");
    return state;
}

GridFunction pulse_wavefunction(int k, const PulseParams& p, std::span<const double> x_grid,
                                const PulseSpectrumOptions& options) {
    const BoundState state = pulse_bound_state(k, p, options);
    const double mu = state.basis_scale;
    const auto table = orthopoly::jacobi_recursion_table(options.truncation, mu, mu);
    GridFunction out;
    out.energy = state.energy;
    out.x.assign(x_grid.begin(), x_grid.end());
    out.psi.resize(out.x.size());
    out.potential.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        const double u = p.lambda * out.x[i];
        const double y = std::tanh(u);
        // sech^mu via logs so large |x| underflows gracefully
        const double log_sech = -std::abs(u) - std::log1p(std::exp(-2.0 * std::abs(u))) + std::log(2.0);
        out.potential[i] = pulse_potential(out.x[i], p);
        out.psi[i] = std::exp(mu * log_sech) * detail::jacobi_series(state.coefficients, table, y);
    }
    out.normalization = normalize(out.x, out.psi);
    return out;
}

}  // namespace tra::models
