#include "series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "tra/errors.hpp"
#include "tra/models/kratzer.hpp"
#include "tra/orthopoly.hpp"

namespace tra::models::detail {

namespace {
constexpr double kRescaleAbove = 1e150;
constexpr double kRescaleFactor = 1e-150;
const double kLogRescale = std::log(1e150);
}  // namespace

double laguerre_series(std::span<const double> coeffs, double nu, double x, double log_prefactor) {
    if (coeffs.empty()) return 0.0;
    double log_scale = 0.0;
    double prev = 0.0;
    double curr = 1.0;
    double sum = coeffs[0];
    for (std::size_t n = 0; n + 1 < coeffs.size(); ++n) {
        const double m = static_cast<double>(n);
        const double next = ((2.0 * m + nu + 1.0 - x) * curr - (m + nu) * prev) / (m + 1.0);
        prev = curr;
        curr = next;
        sum += coeffs[n + 1] * curr;
        if (std::abs(curr) > kRescaleAbove || std::abs(sum) > kRescaleAbove) {
            prev *= kRescaleFactor;
            curr *= kRescaleFactor;
            sum *= kRescaleFactor;
            log_scale += kLogRescale;
        }
    }
    if (sum == 0.0) return 0.0;
    const double log_total = log_prefactor + log_scale + std::log(std::abs(sum));
    if (log_total < -745.0) return 0.0;
    return std::copysign(std::exp(log_total), sum);
}

double jacobi_series(std::span<const double> coeffs, std::span<const orthopoly::JacobiRecursionCoeffs> table,
                     double y) {
    if (coeffs.empty()) return 0.0;
    double prev = 0.0;
    double curr = 1.0;
    double sum = coeffs[0];
    for (std::size_t n = 0; n + 1 < coeffs.size(); ++n) {
        const auto& t = table[n];
        const double next = ((y - t.C) * curr - t.D * prev) / t.G;
        prev = curr;
        curr = next;
        sum += coeffs[n + 1] * curr;
    }
    return sum;
}

void require_converged_tail(std::span<const double> coeffs, const char* model) {
    if (coeffs.empty()) return;
    double big = 0.0;
    for (double c : coeffs) big = std::max(big, std::abs(c));
    const double tail = big > 0.0 ? std::abs(coeffs.back()) / big : 0.0;
    if (!(tail <= kTailTolerance)) {
        const int suggested = static_cast<int>(2 * coeffs.size());
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.3g", tail);
        throw TruncationError(std::string(model) + ": expansion not converged at N = " +
                                  std::to_string(coeffs.size()) + " (tail ratio " + ratio +
                                  "); try N = " + std::to_string(suggested),
                              suggested);
    }
}

}  // namespace tra::models::detail
