#include "tra/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace tra {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

std::complex<double> log_gamma_right(std::complex<double> z) {
    // Re z >= 1/2
    z -= 1.0;
    std::complex<double> sum = kLanczosCoeffs[0];
    for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
        sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
    }
    const std::complex<double> t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

bool is_gamma_pole(std::complex<double> z) {
    if (z.imag() != 0.0 || z.real() > 0.0) {
        return false;
    }
    const double nearest = std::round(z.real());
    return std::abs(z.real() - nearest) <=
           4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(nearest));
}

std::complex<double> log_gamma(std::complex<double> z) {
    if (is_gamma_pole(z)) {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        const std::complex<double> s = std::sin(std::numbers::pi * z);
        return std::log(std::numbers::pi) - std::log(s) - log_gamma_right(1.0 - z);
    }
    return log_gamma_right(z);
}

double abs_gamma(std::complex<double> z) {
    if (is_gamma_pole(z)) {
        return std::numeric_limits<double>::infinity();
    }
    return std::exp(log_gamma(z).real());
}

double abs_reciprocal_gamma(std::complex<double> z) {
    if (is_gamma_pole(z)) {
        return 0.0;
    }
    return std::exp(-log_gamma(z).real());
}

double arg_gamma(std::complex<double> z) {
    return std::remainder(log_gamma(z).imag(), 2.0 * std::numbers::pi);
}

}  // namespace tra
