#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "tra/gamma.hpp"

using tra::abs_gamma;
using tra::log_gamma;

TEST_CASE("|Gamma(iy)|^2 y sinh(pi y) / pi = 1") {
    for (double y : {0.5, 1.0, 2.0}) {
        const double g = abs_gamma({0.0, y});
        CHECK(std::abs(g * g * y * std::sinh(std::numbers::pi * y) / std::numbers::pi - 1.0) < 1e-10);
    }
}

TEST_CASE("log-gamma agrees with lgamma on the real axis") {
    for (double x : {0.1, 0.5, 1.0, 2.5, 7.0, 30.0}) {
        CHECK(std::abs(log_gamma({x, 0.0}).real() - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    }
    // reflection side
    for (double x : {-0.5, -1.5, -3.3}) {
        CHECK(std::abs(log_gamma({x, 0.0}).real() - std::lgamma(x)) < 1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    }
}

TEST_CASE("complex recurrence Gamma(z+1) = z Gamma(z)") {
    for (auto z : {std::complex<double>(0.3, 1.2), std::complex<double>(2.0, -3.0), std::complex<double>(-1.7, 0.4)}) {
        const auto lhs = log_gamma(z + 1.0);
        const auto rhs = log_gamma(z) + std::log(z);
        CHECK(std::abs(lhs.real() - rhs.real()) < 1e-12);
        CHECK(std::abs(std::remainder(lhs.imag() - rhs.imag(), 2.0 * std::numbers::pi)) < 1e-12);
    }
}

TEST_CASE("|Gamma(1/2 + iy)|^2 = pi / cosh(pi y)") {
    for (double y : {0.3, 1.0, 4.0}) {
        const double g = abs_gamma({0.5, y});
        CHECK(std::abs(g * g * std::cosh(std::numbers::pi * y) / std::numbers::pi - 1.0) < 1e-12);
    }
}

TEST_CASE("argument of Gamma is consistent with the log") {
    const std::complex<double> z(1.3, 0.7);
    CHECK(std::abs(std::remainder(tra::arg_gamma(z) - log_gamma(z).imag(), 2.0 * std::numbers::pi)) < 1e-14);
}
