#include "tra/orthopoly.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "tra/errors.hpp"
#include "tra/gamma.hpp"

namespace tra::orthopoly {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_degree(int n) {
    if (n < 0) {
        throw DomainError("polynomial degree must be non-negative, got " + std::to_string(n));
    }
}

void require_above_minus_one(double p, const char* name) {
    if (!(p > -1.0)) {
        throw DomainError(std::string(name) + " must satisfy " + name + " > -1, got " +
                          std::to_string(p));
    }
}

struct BasicJacobi {
    double C;
    double D;
    double G;
};

// Raw (B8) coefficients; n = 0 uses the simplified seed step so that
// mu + nu = 0 or mu + nu + 1 = 0 cause no 0/0.
BasicJacobi basic_jacobi(int n, double mu, double nu) {
    if (n == 0) {
        const double s2 = mu + nu + 2.0;
        if (s2 == 0.0) {
            throw DegenerateParameterError("Jacobi recursion: mu + nu + 2 = 0");
        }
        return {(nu - mu) / s2, 0.0, 2.0 / s2};
    }
    const double s = 2.0 * n + mu + nu;
    if (s == 0.0 || s + 1.0 == 0.0 || s + 2.0 == 0.0) {
        throw DegenerateParameterError("Jacobi recursion: vanishing denominator 2n+mu+nu(+1,+2) at n = " +
                                       std::to_string(n));
    }
    const double nd = static_cast<double>(n);
    return {
        (nu - mu) * (nu + mu) / (s * (s + 2.0)),
        2.0 * (nd + mu) * (nd + nu) / (s * (s + 1.0)),
        2.0 * (nd + 1.0) * (nd + mu + nu + 1.0) / ((s + 1.0) * (s + 2.0)),
    };
}

double cdh_forward(int m, const CdhParams& p) { return (m + p.a + p.b) * (m + p.a + p.c); }
double cdh_backward(int m, const CdhParams& p) { return m * (m + p.b + p.c - 1.0); }

bool cdh_forward_vanishes(int m, const CdhParams& p) {
    const double scale = (m + std::abs(p.a) + std::abs(p.b) + 1.0) * (m + std::abs(p.a) + std::abs(p.c) + 1.0);
    return std::abs(cdh_forward(m, p)) <= 64.0 * kEps * scale;
}

}  // namespace

double pochhammer(double a, int n) {
    require_degree(n);
    double result = 1.0;
    for (int i = 0; i < n; ++i) {
        result *= a + i;
    }
    return result;
}

double laguerre_eval(int n, double nu, double x) {
    require_degree(n);
    require_above_minus_one(nu, "nu");
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double curr = 1.0 + nu - x;
    for (int m = 1; m < n; ++m) {
        // (m+1) L_{m+1} = (2m + nu + 1 - x) L_m - (m + nu) L_{m-1}
        const double next = ((2.0 * m + nu + 1.0 - x) * curr - (m + nu) * prev) / (m + 1.0);
        prev = curr;
        curr = next;
    }
    return curr;
}

double jacobi_eval(int n, double mu, double nu, double y) {
    require_degree(n);
    require_above_minus_one(mu, "mu");
    require_above_minus_one(nu, "nu");
    double prev = 0.0;
    double curr = 1.0;
    for (int m = 0; m < n; ++m) {
        const BasicJacobi k = basic_jacobi(m, mu, nu);
        const double next = ((y - k.C) * curr - k.D * prev) / k.G;
        prev = curr;
        curr = next;
    }
    return curr;
}

double gegenbauer_via_jacobi(int n, double mu, double y) { return jacobi_eval(n, mu, mu, y); }

double cdh_eval(int n, const CdhParams& params) {
    require_degree(n);
    double prev = 0.0;
    double curr = 1.0;
    for (int m = 0; m < n; ++m) {
        if (cdh_forward_vanishes(m, params)) {
            throw DegenerateParameterError("continuous dual Hahn recursion: (n+a+b)(n+a+c) = 0 at n = " +
                                           std::to_string(m));
        }
        const double fwd = cdh_forward(m, params);
        const double bwd = cdh_backward(m, params);
        const double diag = fwd + bwd - params.a * params.a - params.z2;
        const double next = (diag * curr - bwd * prev) / fwd;
        prev = curr;
        curr = next;
    }
    return curr;
}

std::vector<double> cdh_sequence(int count, const CdhParams& params) {
    require_degree(count);
    std::vector<double> seq(static_cast<std::size_t>(count), 0.0);
    if (count == 0) {
        return seq;
    }
    seq[0] = 1.0;
    for (int m = 0; m + 1 < count; ++m) {
        const double prev = m > 0 ? seq[m - 1] : 0.0;
        const double bwd = cdh_backward(m, params);
        const double diag = cdh_forward(m, params) + bwd - params.a * params.a - params.z2;
        if (cdh_forward_vanishes(m, params)) {
            const double row = diag * seq[m] - bwd * prev;
            const double scale = std::abs(diag * seq[m]) + std::abs(bwd * prev) + 1.0;
            if (std::abs(row) > 1e-8 * scale) {
                throw DegenerateParameterError(
                    "continuous dual Hahn recursion: vanishing coefficient with inconsistent row at n = " +
                    std::to_string(m));
            }
            break;  // the rest stays zero
        }
        seq[m + 1] = (diag * seq[m] - bwd * prev) / cdh_forward(m, params);
    }
    return seq;
}

double cdh_asymptotic_amplitude(double z, double a, double b, double c) {
    if (!(z > 0.0)) {
        throw DomainError("cdh_asymptotic_amplitude requires z > 0");
    }
    using cd = std::complex<double>;
    const double inv = abs_reciprocal_gamma(cd(a, z)) * abs_reciprocal_gamma(cd(b, z)) *
                       abs_reciprocal_gamma(cd(c, z));
    if (inv == 0.0) {
        return 0.0;
    }
    return 2.0 * std::tgamma(b + c) * abs_gamma(cd(0.0, 2.0 * z)) * inv;
}

double cdh_asymptotic_phase(double z, double a, double b, double c) {
    if (!(z > 0.0)) {
        throw DomainError("cdh_asymptotic_phase requires z > 0");
    }
    using cd = std::complex<double>;
    const double phase = log_gamma(cd(0.0, 2.0 * z)).imag() - log_gamma(cd(a, z)).imag() -
                         log_gamma(cd(b, z)).imag() - log_gamma(cd(c, z)).imag();
    return std::remainder(phase, 2.0 * std::numbers::pi);
}

std::vector<double> meixner_mod_sequence(int count, const MeixnerParams& params) {
    require_degree(count);
    if (!(params.gamma > 0.0)) {
        throw DomainError("Meixner parameter must satisfy gamma > 0");
    }
    if (!(params.c > 0.0 && params.c < 1.0)) {
        throw DomainError("Meixner parameter must satisfy 0 < c < 1");
    }
    if (params.k < 0) {
        throw DomainError("Meixner lattice index k must be non-negative");
    }
    std::vector<double> seq(static_cast<std::size_t>(count), 0.0);
    // Upward recursion in n is unstable here: the wanted solution decays like
    // c^{n/2} while the other one grows like c^{-n/2}. Self-duality
    // M_n(k) = M_k(n) turns it into a degree-k recursion evaluated at x = n.
    const double c = params.c;
    const double log_sc = 0.5 * std::log(c);
    for (int n = 0; n < count; ++n) {
        double prev = 0.0;
        double curr = 1.0;
        for (int m = 0; m < params.k; ++m) {
            const double next =
                (((c - 1.0) * n + m + (m + params.gamma) * c) * curr - m * prev) / (c * (m + params.gamma));
            prev = curr;
            curr = next;
        }
        seq[n] = curr * std::exp(n * log_sc);
    }
    return seq;
}

double meixner_mod_eval(int n, const MeixnerParams& params) {
    require_degree(n);
    return meixner_mod_sequence(n + 1, params).back();
}

std::vector<JacobiRecursionCoeffs> jacobi_recursion_table(int count, double mu, double nu) {
    require_degree(count);
    std::vector<JacobiRecursionCoeffs> table(static_cast<std::size_t>(count));
    const double half = 0.5 * (mu + nu + 1.0);
    for (int n = 0; n < count; ++n) {
        const BasicJacobi k = basic_jacobi(n, mu, nu);
        auto& t = table[n];
        t.C = k.C;
        t.D = k.D;
        t.G = k.G;
        t.Q = (n + half) * (n + half) - 0.25;
        if (n == 0) {
            t.R = 1.0;
            t.F = 1.0;
            continue;
        }
        const auto& prev = table[n - 1];
        const double m = n - 1.0;
        // (2m+mu+nu+1)/(m+mu+nu+1) -> 1 at m = 0
        const double ratio = (n == 1) ? 1.0 : (2.0 * m + mu + nu + 1.0) / (m + mu + nu + 1.0);
        t.R = prev.R * (m + mu + 1.0) * (m + nu + 1.0) * ratio / ((m + 1.0) * (2.0 * m + mu + nu + 3.0));
        if (prev.Q == 0.0 || prev.G == 0.0) {
            throw DegenerateParameterError("symmetrizing scale F_n: Q or G vanishes at n = " +
                                           std::to_string(n - 1));
        }
        const double radicand = t.Q * t.D / (prev.Q * prev.G);
        if (!(radicand > 0.0)) {
            throw DegenerateParameterError("symmetrizing scale F_n: non-positive radicand at n = " +
                                           std::to_string(n) + " (requires mu + nu > 0)");
        }
        t.F = prev.F * std::sqrt(radicand);
    }
    return table;
}

JacobiRecursionCoeffs jacobi_recursion_coeffs(int n, double mu, double nu) {
    require_degree(n);
    return jacobi_recursion_table(n + 1, mu, nu).back();
}

}  // namespace tra::orthopoly
