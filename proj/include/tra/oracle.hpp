#pragma once

// Finite-difference Schrodinger solver, independent of the TRA pipelines.
// Three-point central differences on a uniform grid; every grid point is an
// unknown and psi is taken to vanish one step beyond either end.

#include <cstddef>
#include <functional>
#include <vector>

#include "tra/grid_function.hpp"
#include "tra/models/types.hpp"
#include "tra/spectral.hpp"

namespace tra::oracle {

struct Grid1D {
    double x0 = 0.0;
    double x1 = 1.0;
    std::size_t n_points = 3;

    double spacing() const { return (x1 - x0) / static_cast<double>(n_points - 1); }
    std::vector<double> points() const;
    /// Throws DomainError unless x1 > x0 and n_points >= 3.
    void validate() const;
};

// Default grids, h = 5e-4 in each case.
inline constexpr Grid1D kKratzerGrid{5e-4, 40.0, 80000};
inline constexpr Grid1D kMorseGrid{-8.0, 25.0, 66001};
inline constexpr Grid1D kPulseGrid{-15.0, 15.0, 60001};

/// Grid used by fd_bound_states when none is given.
Grid1D default_grid(models::ModelKind kind);

using Potential = std::function<double(double)>;

/// diag = 1/h^2 + V(x_i), offdiag = -1/(2 h^2).
spectral::SymTridiag fd_hamiltonian(const Potential& potential, const Grid1D& grid);

/// The model's potential as seen by the FD solver (Kratzer includes the orbital term).
Potential model_potential(const models::ModelParams& params);

struct FdSpectrum {
    std::vector<double> energies;  ///< ascending, all negative
    bool short_count = false;      ///< fewer negative eigenvalues than requested
};

/// The `count` lowest eigenvalues, keeping only the negative ones.
FdSpectrum fd_bound_states(const models::ModelParams& params, const Grid1D& grid, std::size_t count);

/// ||(H_fd - E) psi||_2 / ||psi||_2 over the interior, skipping 5 points at each end.
/// psi.x must be uniformly spaced.
double hamiltonian_residual(const GridFunction& psi, const Potential& potential, double energy);

}  // namespace tra::oracle
