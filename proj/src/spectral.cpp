#include "tra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tra/errors.hpp"
#include "tra/orthopoly.hpp"

namespace tra::spectral {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr std::size_t kBruteForceMaxSize = 12;
constexpr int kInverseIterations = 50;
constexpr double kResidualTolerance = 1e-10;
constexpr std::uint64_t kStartVectorSeed = 0x5eed'7a1eULL;

double pivot_floor(const SymTridiag& m) {
    double max_e2 = 1.0;
    for (double e : m.offdiag) {
        max_e2 = std::max(max_e2, e * e);
    }
    return std::numeric_limits<double>::min() * max_e2 / kEps;
}

std::size_t count_below(const SymTridiag& m, double x, double pivmin) {
    std::size_t negatives = 0;
    double q = m.diag[0] - x;
    if (std::abs(q) < pivmin) q = -pivmin;
    if (q < 0.0) ++negatives;
    for (std::size_t i = 1; i < m.size(); ++i) {
        q = m.diag[i] - x - m.offdiag[i - 1] * m.offdiag[i - 1] / q;
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++negatives;
    }
    return negatives;
}

// Bisection on [lo, hi] with count(lo) <= index < count(hi).
double bisect_eigenvalue(const SymTridiag& m, std::size_t index, double lo, double hi, double pivmin) {
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (count_below(m, mid, pivmin) > index) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Solve (T - shift I) x = rhs in place with partial pivoting (LAPACK gttrf/gttrs layout).
class ShiftedTridiagSolver {
public:
    ShiftedTridiagSolver(const SymTridiag& m, double shift, double tiny) {
        const std::size_t n = m.size();
        d_.resize(n);
        du_.assign(n > 1 ? n - 1 : 0, 0.0);
        dl_.assign(n > 1 ? n - 1 : 0, 0.0);
        du2_.assign(n > 2 ? n - 2 : 0, 0.0);
        pivoted_.assign(n > 1 ? n - 1 : 0, false);
        for (std::size_t i = 0; i < n; ++i) d_[i] = m.diag[i] - shift;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            dl_[i] = m.offdiag[i];
            du_[i] = m.offdiag[i];
        }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(d_[i]) >= std::abs(dl_[i])) {
                if (d_[i] == 0.0) d_[i] = tiny;
                const double fact = dl_[i] / d_[i];
                dl_[i] = fact;
                d_[i + 1] -= fact * du_[i];
            } else {
                const double fact = d_[i] / dl_[i];
                d_[i] = dl_[i];
                dl_[i] = fact;
                const double temp = du_[i];
                du_[i] = d_[i + 1];
                d_[i + 1] = temp - fact * d_[i + 1];
                if (i + 2 < n) {
                    du2_[i] = du_[i + 1];
                    du_[i + 1] = -fact * du_[i + 1];
                }
                pivoted_[i] = true;
            }
        }
        if (d_[n - 1] == 0.0) d_[n - 1] = tiny;
        for (double& v : d_) {
            if (std::abs(v) < tiny) v = std::copysign(tiny, v);
        }
    }

    void solve(std::vector<double>& b) const {
        const std::size_t n = d_.size();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (pivoted_[i]) {
                const double temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - dl_[i] * b[i];
            } else {
                b[i + 1] -= dl_[i] * b[i];
            }
        }
        b[n - 1] /= d_[n - 1];
        if (n > 1) b[n - 2] = (b[n - 2] - du_[n - 2] * b[n - 1]) / d_[n - 2];
        for (std::size_t k = n - 2; k-- > 0;) {
            b[k] = (b[k] - du_[k] * b[k + 1] - du2_[k] * b[k + 2]) / d_[k];
        }
    }

private:
    std::vector<double> d_;
    std::vector<double> du_;
    std::vector<double> dl_;
    std::vector<double> du2_;
    std::vector<bool> pivoted_;
};

double euclidean_norm(const std::vector<double>& v) {
    double scale = 0.0;
    for (double x : v) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (double x : v) sum += (x / scale) * (x / scale);
    return scale * std::sqrt(sum);
}

std::vector<double> multiply(const SymTridiag& m, const std::vector<double>& x) {
    const std::size_t n = m.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = m.diag[i] * x[i];
        if (i > 0) v += m.offdiag[i - 1] * x[i - 1];
        if (i + 1 < n) v += m.offdiag[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

// Characteristic polynomial det(T_k - x I) of the leading k x k block (k >= 1)
// of an unreduced tridiagonal given by diag and positive products.
double char_poly(const std::vector<double>& d, const std::vector<double>& prod, std::size_t k, double x) {
    double pm2 = 1.0;
    double pm1 = d[0] - x;
    for (std::size_t i = 1; i < k; ++i) {
        const double p = (d[i] - x) * pm1 - prod[i - 1] * pm2;
        pm2 = pm1;
        pm1 = p;
    }
    return pm1;
}

// Root of p_k in [lo, hi], where p_k has sign lo_sign at lo and the opposite
// sign at hi by interlacing. Endpoint values are not evaluated: where an
// interlacing gap is below rounding their computed sign can be wrong, and
// bisection on interior points then still lands on the right root, or on the
// endpoint itself when that is where the root is.
double bisect_char_poly(const std::vector<double>& d, const std::vector<double>& prod, std::size_t k,
                        double lo, double hi, double lo_sign) {
    double flo = lo_sign;
    for (int iter = 0; iter < 2000; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fmid = char_poly(d, prod, k, mid);
        if (fmid == 0.0) return mid;
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> unreduced_block_roots(const std::vector<double>& d, const std::vector<double>& prod) {
    const std::size_t n = d.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::sqrt(prod[i - 1]);
        if (i + 1 < n) radius += std::sqrt(prod[i]);
        lo = std::min(lo, d[i] - radius);
        hi = std::max(hi, d[i] + radius);
    }
    const double pad = 1.0 + 1e-3 * (hi - lo);
    lo -= pad;
    hi += pad;

    std::vector<double> roots{d[0]};
    for (std::size_t k = 2; k <= n; ++k) {
        std::vector<double> brackets;
        brackets.reserve(roots.size() + 2);
        brackets.push_back(lo);
        brackets.insert(brackets.end(), roots.begin(), roots.end());
        brackets.push_back(hi);
        std::vector<double> next;
        next.reserve(k);
        for (std::size_t j = 0; j + 1 < brackets.size(); ++j) {
            next.push_back(bisect_char_poly(d, prod, k, brackets[j], brackets[j + 1], j % 2 == 0 ? 1.0 : -1.0));
        }
        roots = std::move(next);
    }
    return roots;
}

}  // namespace

void SymTridiag::validate() const {
    if (diag.empty()) {
        throw DomainError("symmetric tridiagonal matrix must have N >= 1");
    }
    if (offdiag.size() + 1 != diag.size()) {
        throw DomainError("symmetric tridiagonal matrix: offdiag must have N-1 entries");
    }
    for (double v : diag) {
        if (!std::isfinite(v)) throw DomainError("symmetric tridiagonal matrix: non-finite diagonal entry");
    }
    for (double v : offdiag) {
        if (!std::isfinite(v)) throw DomainError("symmetric tridiagonal matrix: non-finite off-diagonal entry");
    }
}

double SymTridiag::norm_inf() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double row = std::abs(diag[i]);
        if (i > 0) row += std::abs(offdiag[i - 1]);
        if (i < offdiag.size()) row += std::abs(offdiag[i]);
        norm = std::max(norm, row);
    }
    return norm;
}

std::size_t sturm_count(const SymTridiag& m, double x) {
    m.validate();
    return count_below(m, x, pivot_floor(m));
}

std::pair<double, double> gershgorin_bounds(const SymTridiag& m) {
    m.validate();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < m.size(); ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(m.offdiag[i - 1]);
        if (i < m.offdiag.size()) radius += std::abs(m.offdiag[i]);
        lo = std::min(lo, m.diag[i] - radius);
        hi = std::max(hi, m.diag[i] + radius);
    }
    const double pad = 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + 4.0 * pivot_floor(m);
    return {lo - pad, hi + pad};
}

double sym_tridiag_eigenvalue(const SymTridiag& m, std::size_t index) {
    m.validate();
    if (index >= m.size()) {
        throw DomainError("eigenvalue index " + std::to_string(index) + " out of range");
    }
    const auto [lo, hi] = gershgorin_bounds(m);
    return bisect_eigenvalue(m, index, lo, hi, pivot_floor(m));
}

std::vector<double> sym_tridiag_eigenvalues(const SymTridiag& m, const EigenSelection& which) {
    m.validate();
    const auto [glo, ghi] = gershgorin_bounds(m);
    const double pivmin = pivot_floor(m);
    std::size_t first = 0;
    std::size_t last = m.size();  // exclusive
    switch (which.kind()) {
        case EigenSelection::Kind::all:
            break;
        case EigenSelection::Kind::lowest:
            last = std::min(which.count(), m.size());
            break;
        case EigenSelection::Kind::in_interval:
            if (!(which.lo() < which.hi())) {
                throw DomainError("eigenvalue interval must satisfy lo < hi");
            }
            first = sturm_count(m, which.lo());
            last = sturm_count(m, which.hi());
            break;
    }
    std::vector<double> values;
    values.reserve(last > first ? last - first : 0);
    for (std::size_t j = first; j < last; ++j) {
        values.push_back(bisect_eigenvalue(m, j, glo, ghi, pivmin));
    }
    return values;
}

EigenPair sym_tridiag_eigenvector(const SymTridiag& m, double value) {
    m.validate();
    const std::size_t n = m.size();
    const double norm = std::max(m.norm_inf(), std::numeric_limits<double>::min());
    if (n == 1) {
        return {m.diag[0], {1.0}};
    }
    const ShiftedTridiagSolver solver(m, value, kEps * norm);

    std::mt19937_64 rng(kStartVectorSeed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<double> x(n);
    for (double& v : x) v = uniform(rng);

    double best_residual = std::numeric_limits<double>::infinity();
    EigenPair result;
    for (int iter = 0; iter < kInverseIterations; ++iter) {
        solver.solve(x);
        const double xnorm = euclidean_norm(x);
        if (!(xnorm > 0.0) || !std::isfinite(xnorm)) {
            throw NumericalFailure("inverse iteration produced a degenerate vector");
        }
        for (double& v : x) v /= xnorm;
        const std::vector<double> mx = multiply(m, x);
        double rayleigh = 0.0;
        for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * mx[i];
        std::vector<double> r(n);
        for (std::size_t i = 0; i < n; ++i) r[i] = mx[i] - rayleigh * x[i];
        const double residual = euclidean_norm(r);
        if (residual < best_residual) {
            best_residual = residual;
            result.value = rayleigh;
            result.vector = x;
        }
        if (residual <= kResidualTolerance * norm && iter >= 1) {
            break;
        }
    }
    if (!(best_residual <= kResidualTolerance * norm)) {
        throw NumericalFailure("inverse iteration did not converge: scaled residual " +
                               std::to_string(best_residual / norm));
    }
    double big = 0.0;
    for (double v : result.vector) big = std::max(big, std::abs(v));
    for (double v : result.vector) {
        if (std::abs(v) > 1e-12 * big) {
            if (v < 0.0) {
                for (double& w : result.vector) w = -w;
            }
            break;
        }
    }
    return result;
}

SymTridiag build_pulse_matrix(double mu, double nu, double b_over_a, int n, double d_perturbation) {
    if (n < 1) {
        throw DomainError("pulse matrix size must be positive");
    }
    if (!(mu > -1.0) || !(nu > -1.0)) {
        throw DomainError("pulse matrix requires mu > -1 and nu > -1");
    }
    const auto table = orthopoly::jacobi_recursion_table(n, mu, nu);
    SymTridiag m;
    m.diag.resize(static_cast<std::size_t>(n));
    m.offdiag.resize(static_cast<std::size_t>(n - 1));
    for (int i = 0; i < n; ++i) {
        if (table[i].Q == 0.0) {
            throw DegenerateParameterError("pulse matrix: Q_n = 0 at n = " + std::to_string(i));
        }
        m.diag[i] = (table[i].C + b_over_a) / table[i].Q;
        if (i > 0) {
            const double d = table[i].D * (1.0 + d_perturbation);
            const double radicand = table[i - 1].G * d / (table[i - 1].Q * table[i].Q);
            if (!(radicand >= 0.0)) {
                throw InconsistentStateError("pulse matrix: negative off-diagonal radicand at n = " +
                                             std::to_string(i));
            }
            m.offdiag[i - 1] = std::sqrt(radicand);
        }
    }
    return m;
}

Tridiag build_pulse_companion(double mu, double nu, double b_over_a, int n) {
    if (n < 1) {
        throw DomainError("pulse matrix size must be positive");
    }
    const auto table = orthopoly::jacobi_recursion_table(n, mu, nu);
    Tridiag t;
    t.diag.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        t.diag[i] = (table[i].C + b_over_a) / table[i].Q;
        if (i > 0) {
            t.lower.push_back(table[i - 1].G / table[i].Q);
            t.upper.push_back(table[i].D / table[i - 1].Q);
        }
    }
    return t;
}

std::vector<double> dense_eig_bruteforce(const SymTridiag& m) {
    m.validate();
    return dense_eig_bruteforce(Tridiag{m.diag, m.offdiag, m.offdiag});
}

std::vector<double> dense_eig_bruteforce(const Tridiag& m) {
    const std::size_t n = m.diag.size();
    if (n == 0 || m.lower.size() + 1 != n || m.upper.size() + 1 != n) {
        throw DomainError("tridiagonal matrix has inconsistent dimensions");
    }
    if (n > kBruteForceMaxSize) {
        throw DomainError("dense_eig_bruteforce supports N <= 12, got " + std::to_string(n));
    }
    std::vector<double> values;
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const bool split = (i + 1 == n) || (m.lower[i] * m.upper[i] == 0.0);
        if (!split) {
            if (m.lower[i] * m.upper[i] < 0.0) {
                throw DomainError("dense_eig_bruteforce requires lower*upper >= 0 (real spectrum)");
            }
            continue;
        }
        std::vector<double> d(m.diag.begin() + static_cast<std::ptrdiff_t>(start),
                              m.diag.begin() + static_cast<std::ptrdiff_t>(i + 1));
        std::vector<double> prod;
        for (std::size_t j = start; j < i; ++j) prod.push_back(m.lower[j] * m.upper[j]);
        const auto roots = unreduced_block_roots(d, prod);
        values.insert(values.end(), roots.begin(), roots.end());
        start = i + 1;
    }
    std::sort(values.begin(), values.end());
    return values;
}

}  // namespace tra::spectral
