#include "tra/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "tra/errors.hpp"

namespace tra {

std::vector<double> uniform_grid(double x0, double x1, std::size_t n) {
    if (n < 2 || !(x1 > x0)) {
        throw DomainError("uniform grid needs n >= 2 and x1 > x0");
    }
    std::vector<double> x(n);
    const double h = (x1 - x0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = x0 + h * static_cast<double>(i);
    }
    x.back() = x1;
    return x;
}

double trapezoid_norm(std::span<const double> x, std::span<const double> psi) {
    if (x.size() != psi.size() || x.size() < 2) {
        throw DomainError("trapezoid_norm: need matching samples, at least two");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        sum += 0.5 * (x[i + 1] - x[i]) * (psi[i] * psi[i] + psi[i + 1] * psi[i + 1]);
    }
    return std::sqrt(sum);
}

double normalize(std::span<const double> x, std::span<double> psi) {
    const double norm = trapezoid_norm(x, psi);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NumericalFailure("cannot normalize a wavefunction with zero or non-finite norm");
    }
    const double factor = 1.0 / norm;
    for (double& v : psi) v *= factor;
    return factor;
}

int count_nodes(std::span<const double> psi, double rel_floor) {
    double big = 0.0;
    for (double v : psi) big = std::max(big, std::abs(v));
    const double floor = rel_floor * big;
    int nodes = 0;
    int last_sign = 0;
    for (double v : psi) {
        if (std::abs(v) <= floor) continue;
        const int sign = v > 0.0 ? 1 : -1;
        if (last_sign != 0 && sign != last_sign) ++nodes;
        last_sign = sign;
    }
    return nodes;
}

namespace {
double max_abs(std::span<const double> psi) {
    double big = 0.0;
    for (double v : psi) big = std::max(big, std::abs(v));
    return big;
}
}  // namespace

double endpoint_decay_ratio(std::span<const double> psi) {
    const double big = max_abs(psi);
    if (big == 0.0) return 0.0;
    return std::max(std::abs(psi.front()), std::abs(psi.back())) / big;
}

double far_end_decay_ratio(std::span<const double> psi) {
    const double big = max_abs(psi);
    if (big == 0.0) return 0.0;
    return std::abs(psi.back()) / big;
}

}  // namespace tra
