#include "tra/oracle.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "tra/errors.hpp"
#include "tra/models/kratzer.hpp"
#include "tra/models/morse.hpp"
#include "tra/models/pulse.hpp"

namespace tra::oracle {

namespace {
constexpr std::size_t kResidualSkip = 5;
constexpr std::size_t kResidualMinInterior = 20;
}  // namespace

void Grid1D::validate() const {
    if (!(x1 > x0) || n_points < 3) {
        throw DomainError("grid needs x1 > x0 and at least 3 points");
    }
}

std::vector<double> Grid1D::points() const {
    validate();
    return uniform_grid(x0, x1, n_points);
}

Grid1D default_grid(models::ModelKind kind) {
    switch (kind) {
        case models::ModelKind::kratzer: return kKratzerGrid;
        case models::ModelKind::morse: return kMorseGrid;
        case models::ModelKind::pulse: return kPulseGrid;
    }
    return kPulseGrid;
}

spectral::SymTridiag fd_hamiltonian(const Potential& potential, const Grid1D& grid) {
    const auto x = grid.points();
    const double h = grid.spacing();
    const double kinetic = 1.0 / (h * h);
    spectral::SymTridiag m;
    m.diag.resize(x.size());
    m.offdiag.assign(x.size() - 1, -0.5 * kinetic);
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = potential(x[i]);
        if (!std::isfinite(v)) {
            throw DomainError("potential is not finite at x = " + std::to_string(x[i]));
        }
        m.diag[i] = kinetic + v;
    }
    return m;
}

Potential model_potential(const models::ModelParams& params) {
    return std::visit(
        [](const auto& p) -> Potential {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, models::KratzerParams>) {
                return [p](double r) { return models::kratzer_potential(r, p, true); };
            } else if constexpr (std::is_same_v<T, models::MorseParams>) {
                return [p](double x) { return models::morse_potential(x, p); };
            } else {
                return [p](double x) { return models::pulse_potential(x, p); };
            }
        },
        params);
}

FdSpectrum fd_bound_states(const models::ModelParams& params, const Grid1D& grid, std::size_t count) {
    const auto h = fd_hamiltonian(model_potential(params), grid);
    FdSpectrum out;
    const std::size_t negative = spectral::sturm_count(h, 0.0);
    const std::size_t take = std::min(count, negative);
    out.short_count = take < count;
    if (take > 0) {
        out.energies = spectral::sym_tridiag_eigenvalues(h, spectral::EigenSelection::lowest(take));
    }
    return out;
}

double hamiltonian_residual(const GridFunction& psi, const Potential& potential, double energy) {
    const std::size_t n = psi.x.size();
    if (psi.psi.size() != n) {
        throw DomainError("grid function has mismatched x and psi columns");
    }
    if (n < 2 * kResidualSkip + kResidualMinInterior) {
        throw DomainError("grid too small for a residual: need at least 20 interior points");
    }
    const double h = (psi.x.back() - psi.x.front()) / static_cast<double>(n - 1);
    const double kinetic = 0.5 / (h * h);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = kResidualSkip; i + kResidualSkip < n; ++i) {
        const double lap = psi.psi[i - 1] - 2.0 * psi.psi[i] + psi.psi[i + 1];
        const double r = -kinetic * lap + (potential(psi.x[i]) - energy) * psi.psi[i];
        num += r * r;
        den += psi.psi[i] * psi.psi[i];
    }
    if (den == 0.0) {
        throw DomainError("residual of an identically zero function");
    }
    return std::sqrt(num / den);
}

}  // namespace tra::oracle
