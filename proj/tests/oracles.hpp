#pragma once

// Independent reference values: terminating hypergeometric sums written out
// term by term. Nothing here shares code with the library's recursions.

#include <cmath>

namespace oracle_sums {

inline double rising(double a, int k) {
    double p = 1.0;
    for (int j = 0; j < k; ++j) p *= a + j;
    return p;
}

inline double factorial(int k) { return rising(1.0, k); }

/// L_n^nu(x) = (nu+1)_n / n! * 1F1(-n; nu+1; x)
inline double laguerre(int n, double nu, double x) {
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += rising(-n, k) / (rising(nu + 1.0, k) * factorial(k)) * std::pow(x, k);
    }
    return rising(nu + 1.0, n) / factorial(n) * sum;
}

/// P_n^{(a,b)}(y) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-y)/2), expanded
/// about the nearer endpoint via P_n^{(a,b)}(y) = (-1)^n P_n^{(b,a)}(-y).
inline double jacobi(int n, double a, double b, double y) {
    if (y < 0.0) return ((n % 2) ? -1.0 : 1.0) * jacobi(n, b, a, -y);
    const double t = 0.5 * (1.0 - y);
    double sum = 0.0;
    for (int k = 0; k <= n; ++k) {
        sum += rising(-n, k) * rising(n + a + b + 1.0, k) / (rising(a + 1.0, k) * factorial(k)) * std::pow(t, k);
    }
    return rising(a + 1.0, n) / factorial(n) * sum;
}

/// Gegenbauer C_n^{(g)}(y) from its explicit power sum.
inline double gegenbauer(int n, double g, double y) {
    double sum = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        const double sign = (k % 2) ? -1.0 : 1.0;
        sum += sign * rising(g, n - k) / (factorial(k) * factorial(n - 2 * k)) * std::pow(2.0 * y, n - 2 * k);
    }
    return sum;
}

/// 3F2(-n, a+iz, a-iz; a+b, a+c; 1); (a+iz)_k (a-iz)_k = prod ((a+m)^2 + z^2).
inline double cdh(int n, double a, double b, double c, double z2) {
    double sum = 0.0;
    double term = 1.0;
    for (int k = 0; k <= n; ++k) {
        sum += term;
        term *= (-n + k) * ((a + k) * (a + k) + z2) / ((a + b + k) * (a + c + k) * (k + 1.0));
    }
    return sum;
}

/// c^{n/2} 2F1(-n, -k; gamma; 1 - 1/c)
inline double meixner_mod(int n, int k, double gamma, double c) {
    const double w = 1.0 - 1.0 / c;
    double sum = 0.0;
    for (int j = 0; j <= std::min(n, k); ++j) {
        sum += rising(-n, j) * rising(-k, j) / (rising(gamma, j) * factorial(j)) * std::pow(w, j);
    }
    return std::pow(c, 0.5 * n) * sum;
}

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace oracle_sums
