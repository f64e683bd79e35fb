#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace tra {

/// Samples of a wavefunction and its potential on a coordinate grid.
struct GridFunction {
    std::vector<double> x;
    std::vector<double> psi;
    std::vector<double> potential;
    double energy = 0.0;
    double normalization = 1.0;  ///< factor applied to the raw series (f_0)
};

/// n equally spaced points from x0 to x1 inclusive (n >= 2).
std::vector<double> uniform_grid(double x0, double x1, std::size_t n);

/// sqrt(integral psi^2 dx) by the trapezoidal rule.
double trapezoid_norm(std::span<const double> x, std::span<const double> psi);

/// Scales psi to unit trapezoidal norm; returns the factor applied.
double normalize(std::span<const double> x, std::span<double> psi);

/// Sign changes of psi, ignoring samples below rel_floor * max|psi|.
int count_nodes(std::span<const double> psi, double rel_floor = 1e-8);

/// max(|psi(front)|, |psi(back)|) / max|psi|.
double endpoint_decay_ratio(std::span<const double> psi);

/// |psi(back)| / max|psi|, for radial functions that vanish at the origin by construction.
double far_end_decay_ratio(std::span<const double> psi);

}  // namespace tra
