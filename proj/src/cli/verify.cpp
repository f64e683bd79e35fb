#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "reference.hpp"
#include "tra/cli/commands.hpp"
#include "tra/cli/csv.hpp"
#include "tra/errors.hpp"
#include "tra/gamma.hpp"
#include "tra/models/kratzer.hpp"
#include "tra/models/morse.hpp"
#include "tra/models/pulse.hpp"
#include "tra/oracle.hpp"
#include "tra/orthopoly.hpp"
#include "tra/spectral.hpp"

namespace tra::cli {

namespace {

class Report {
public:
    explicit Report(std::ostream& out) : out_(out) {}

    void check(const std::string& block, const std::string& name, double deviation, double tolerance) {
        const bool ok = deviation <= tolerance;
        line(ok ? "PASS" : "FAIL", block, name, deviation, tolerance);
        ok ? ++passed_ : ++failed_;
    }

    void check_exact(const std::string& block, const std::string& name, bool ok, const std::string& detail) {
        out_ << (ok ? "PASS" : "FAIL") << "  " << block << "  " << name << "  " << detail << '\n';
        ok ? ++passed_ : ++failed_;
    }

    void info(const std::string& block, const std::string& name, double deviation, double tolerance) {
        line("INFO", block, name, deviation, tolerance);
        ++infos_;
    }

    void error(const std::string& block, const std::string& what) {
        out_ << "FAIL  " << block << "  raised: " << what << '\n';
        ++failed_;
    }

    int failed() const { return failed_; }

    void summary() {
        out_ << "verify: " << passed_ << " passed, " << failed_ << " failed, " << infos_ << " informational\n";
    }

private:
    void line(const char* tag, const std::string& block, const std::string& name, double dev, double tol) {
        out_ << tag << "  " << block << "  " << name << "  deviation=" << format_number(dev)
             << "  tolerance=" << format_number(tol) << '\n';
    }

    std::ostream& out_;
    int passed_ = 0;
    int failed_ = 0;
    int infos_ = 0;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::string level(const char* prefix, std::size_t k) { return std::string(prefix) + std::to_string(k); }

void block_table1(const RunConfig& config, Report& r) {
    const char* b = "table1";
    const models::PulseParams p{100.0, -50.0, 1.0};
    std::vector<std::vector<double>> ours;
    for (int n : reference::kTable1Sizes) {
        models::PulseSpectrumOptions o;
        o.truncation = n;
        o.d_perturbation = config.perturb_recursion;
        auto e = models::pulse_spectrum(p, o);
        for (double& v : e) v = -v;
        ours.push_back(e);
    }
    const std::size_t last = reference::kTable1Sizes.size() - 1;
    for (std::size_t col = 0; col <= last; ++col) {
        const int n = reference::kTable1Sizes[col];
        const auto& e = ours[col];
        const bool hard = col == last;
        if (hard) {
            r.check_exact(b, "N=100 level count", e.size() == 6, "found " + std::to_string(e.size()) + ", expected 6");
        }
        for (std::size_t k = 0; k < 6 && k < e.size(); ++k) {
            const std::string name = "N=" + std::to_string(n) + " " + level("level ", k) + " vs published";
            const double dev = rel(e[k], reference::kTable1[col][k]);
            hard ? r.check(b, name, dev, 1e-11) : r.info(b, name, dev, 1e-11);
        }
    }
    // Our own truncation convergence: N = 30 and 50 against N = 100.
    for (std::size_t col : {std::size_t{2}, std::size_t{3}}) {
        for (std::size_t k = 0; k < 6 && k < ours[col].size() && k < ours[last].size(); ++k) {
            r.check(b, "N=" + std::to_string(reference::kTable1Sizes[col]) + " " + level("level ", k) + " vs N=100",
                    rel(ours[col][k], ours[last][k]), 1e-11);
        }
    }
}

void block_kratzer(Report& r) {
    const char* b = "kratzer";
    const auto pps = models::kratzer_pps(-0.5, -5.0, 1);
    const double expected[] = {18.0, 10.0, 4.0, 0.0, -2.0};
    r.check_exact(b, "PPS size at E=-1/2", pps.entries.size() == 5, "found " + std::to_string(pps.entries.size()));
    for (std::size_t k = 0; k < pps.entries.size() && k < 5; ++k) {
        r.check(b, level("PPS beta_", k), std::abs(pps.entries[k].rho - expected[k]), 1e-12);
        const auto e = models::kratzer_spectrum({-5.0, pps.entries[k].rho, 1}, static_cast<int>(k));
        r.check(b, level("round trip E_", k), rel(e.back(), -0.5), 1e-12);
    }
    const auto e = models::kratzer_spectrum({-5.0, 18.0, 1}, 2);
    r.check(b, "spectrum E_1 at beta=18", rel(e[1], -12.5 / 36.0), 1e-12);
}

void block_morse(Report& r) {
    const char* b = "morse";
    const double root5 = std::sqrt(5.0);
    const auto pps = models::morse_pps(-2.0, 5.0, 1.0, 3);
    for (const auto& e : pps.entries) {
        r.check(b, level("PPS beta_", e.k), rel(e.rho, -root5 * (2.0 * e.k + 5.0)), 1e-12);
        const auto spec = models::morse_spectrum({5.0, e.rho, 1.0});
        const bool has = static_cast<int>(spec.size()) > e.k;
        if (has) {
            r.check(b, level("round trip E_", e.k), rel(spec[e.k], -2.0), 1e-12);
        } else {
            r.check_exact(b, level("round trip E_", e.k), false, "level missing from spectrum");
        }
    }
    const auto spec = models::morse_spectrum({5.0, -5.0 * root5, 1.0});
    const bool exact = spec.size() == 2 && spec[0] == -2.0 && spec[1] == -0.5;
    r.check_exact(b, "spectrum at beta=-5 sqrt(5) is {-2, -0.5}", exact, "found " + std::to_string(spec.size()) + " levels");
}

void block_pulse(Report& r) {
    const char* b = "pulse";
    for (double ratio : {0.7, -0.7}) {
        models::PulsePpsOptions o;
        o.truncation = 200;
        const auto pps = models::pulse_pps(-1.0, ratio, 1.0, o);
        r.check_exact(b, "PPS count at B/A=" + format_number(ratio), pps.entries.size() == 4,
                      "found " + std::to_string(pps.entries.size()) + " (N=200 stable against N=400)");
        for (const auto& e : pps.entries) {
            const auto spec = models::pulse_spectrum({e.rho, ratio * e.rho, 1.0});
            double best = INFINITY;
            for (double v : spec) best = std::min(best, rel(v, -1.0));
            r.check(b, "round trip A_" + std::to_string(e.k) + " at B/A=" + format_number(ratio), best, 1e-9);
        }
    }
}

void block_oracle(Report& r) {
    const char* b = "oracle";
    const auto kr = oracle::fd_bound_states(models::KratzerParams{-5.0, 18.0, 1}, oracle::kKratzerGrid, 1);
    r.check(b, "Kratzer ground state", kr.energies.empty() ? INFINITY : std::abs(kr.energies[0] + 0.5), 1e-4);
    const auto mo = oracle::fd_bound_states(models::MorseParams{5.0, -5.0 * std::sqrt(5.0), 1.0}, oracle::kMorseGrid, 2);
    const double morse_ref[] = {-2.0, -0.5};
    for (std::size_t k = 0; k < 2; ++k) {
        r.check(b, level("Morse E_", k), k < mo.energies.size() ? std::abs(mo.energies[k] - morse_ref[k]) : INFINITY,
                1e-4);
    }
    const auto pu = oracle::fd_bound_states(models::PulseParams{100.0, -50.0, 1.0}, oracle::kPulseGrid, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const double ref = -reference::kTable1.back()[k];
        r.check(b, level("pulse E_", k), k < pu.energies.size() ? std::abs(pu.energies[k] - ref) : INFINITY, 1e-2);
    }
}

// Radial functions only need to vanish at the far end; psi(0) = 0 is imposed by the basis.
void wavefunction_checks(Report& r, const std::string& name, const GridFunction& wf, int k,
                         const oracle::Potential& v, bool radial = false) {
    const char* b = "wavefunctions";
    r.check(b, name + " norm", std::abs(trapezoid_norm(wf.x, wf.psi) - 1.0), 1e-10);
    const int nodes = count_nodes(wf.psi);
    r.check_exact(b, name + " nodes", nodes == k, std::to_string(nodes) + " nodes, expected " + std::to_string(k));
    const double decay = radial ? far_end_decay_ratio(wf.psi) : endpoint_decay_ratio(wf.psi);
    r.check(b, name + " boundary decay", decay, 1e-8);
    r.check(b, name + " FD residual", oracle::hamiltonian_residual(wf, v, wf.energy), 1e-5);
}

void block_wavefunctions(Report& r) {
    // Kratzer at E = -1/2: r up to 120/lambda.
    const auto kpps = models::kratzer_pps(-0.5, -5.0, 1);
    const auto rg = uniform_grid(5e-4, 60.0, 120000);
    for (int k = 0; k <= 3; ++k) {
        const models::KratzerParams p{-5.0, kpps.entries[k].rho, 1};
        wavefunction_checks(r, "Kratzer k=" + std::to_string(k), models::kratzer_wavefunction(k, p, rg), k,
                            oracle::model_potential(p), true);
    }
    // Morse at E = -2 (nu = 4): |x| <= 30.
    const auto mpps = models::morse_pps(-2.0, 5.0, 1.0, 3);
    const auto mg = uniform_grid(-30.0, 30.0, 120001);
    for (int k = 0; k <= 3; ++k) {
        const models::MorseParams p{5.0, mpps.entries[k].rho, 1.0};
        wavefunction_checks(r, "Morse k=" + std::to_string(k), models::morse_wavefunction(k, p, mg), k,
                            oracle::model_potential(p));
    }
    // Pulse at E = -1 (mu = 1): |x| <= 30, h = 2.5e-4.
    const auto pg = uniform_grid(-30.0, 30.0, 240001);
    for (double ratio : {0.7, -0.7}) {
        const auto pps = models::pulse_pps(-1.0, ratio, 1.0);
        for (const auto& e : pps.entries) {
            const models::PulseParams p{e.rho, ratio * e.rho, 1.0};
            const auto spec = models::pulse_spectrum(p);
            int lvl = -1;
            for (std::size_t j = 0; j < spec.size(); ++j) {
                if (rel(spec[j], -1.0) <= 1e-9) lvl = static_cast<int>(j);
            }
            const std::string name = "pulse B/A=" + format_number(ratio) + " A_" + std::to_string(e.k);
            if (lvl < 0) {
                r.check_exact("wavefunctions", name, false, "energy -1 not found in spectrum");
                continue;
            }
            wavefunction_checks(r, name, models::pulse_wavefunction(lvl, p, pg), e.k, oracle::model_potential(p));
        }
    }
}

void block_orthopoly(Report& r) {
    const char* b = "orthopoly";
    for (double y : {0.5, 1.0, 2.0}) {
        const double g = abs_gamma({0.0, y});
        r.check(b, "|Gamma(iy)|^2 y sinh(pi y)/pi at y=" + format_number(y),
                std::abs(g * g * y * std::sinh(std::numbers::pi * y) / std::numbers::pi - 1.0), 1e-10);
    }
    bool same = true;
    for (int n = 0; n <= 8; ++n) {
        for (double y : {-0.9, -0.3, 0.2, 0.75}) {
            same = same && orthopoly::gegenbauer_via_jacobi(n, 1.3, y) == orthopoly::jacobi_eval(n, 1.3, 1.3, y);
        }
    }
    r.check_exact(b, "Gegenbauer route equals symmetric Jacobi", same, "bit-equal on 36 samples");
    // L_2^nu(x) = ((nu+1)(nu+2) - 2(nu+2)x + x^2)/2
    const double nu = 0.7, x = 1.9;
    r.check(b, "L_2 closed form", rel(orthopoly::laguerre_eval(2, nu, x), ((nu + 1) * (nu + 2) - 2 * (nu + 2) * x + x * x) / 2),
            1e-12);
    // P_1^{(a,b)}(y) = (a+1) + (a+b+2)(y-1)/2
    const double a = 0.4, c = 1.6, y = 0.6;
    r.check(b, "P_1 closed form", rel(orthopoly::jacobi_eval(1, a, c, y), (a + 1) + (a + c + 2) * (y - 1) / 2), 1e-12);
    // Modified Meixner sequence against its three-term recursion in n.
    {
        const double sc = models::morse_meixner_sqrt_c(5.0);
        const orthopoly::MeixnerParams mp{5.0, sc * sc, 2};
        const auto m = orthopoly::meixner_mod_sequence(12, mp);
        double worst = 0.0;
        for (int n = 1; n + 1 < 12; ++n) {
            const double lhs = (sc - 1.0 / sc) * mp.k * m[n];
            const double rhs = -(n * (sc + 1.0 / sc) + mp.gamma * sc) * m[n] + (n + mp.gamma) * m[n + 1] + n * m[n - 1];
            const double scale = std::abs(n * (sc + 1.0 / sc) * m[n]) + std::abs((n + mp.gamma) * m[n + 1]) + 1e-300;
            worst = std::max(worst, std::abs(lhs - rhs) / scale);
        }
        r.check(b, "modified Meixner recursion residual", worst, 1e-12);
    }
    // Continuous dual Hahn sequence against its three-term recursion.
    {
        const orthopoly::CdhParams cp{0.8, 1.1, 0.6, 0.49};
        const auto s = orthopoly::cdh_sequence(10, cp);
        double worst = 0.0;
        for (int n = 1; n + 1 < 10; ++n) {
            const double fwd = (n + cp.a + cp.b) * (n + cp.a + cp.c);
            const double bwd = n * (n + cp.b + cp.c - 1.0);
            const double lhs = -(cp.a * cp.a + cp.z2) * s[n];
            const double rhs = fwd * s[n + 1] - (fwd + bwd) * s[n] + bwd * s[n - 1];
            worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(fwd * s[n + 1]) + std::abs(bwd * s[n - 1]) + 1e-300));
        }
        r.check(b, "continuous dual Hahn recursion residual", worst, 1e-12);
    }
}

spectral::SymTridiag random_matrix(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    spectral::SymTridiag m;
    for (std::size_t i = 0; i < n; ++i) m.diag.push_back(u(rng));
    for (std::size_t i = 0; i + 1 < n; ++i) m.offdiag.push_back(u(rng));
    return m;
}

void block_eigen(Report& r) {
    const char* b = "eigen";
    // Toeplitz: a on the diagonal, c off it -> a + 2c cos(j pi/(N+1)).
    {
        const std::size_t n = 50;
        spectral::SymTridiag t{std::vector<double>(n, 2.0), std::vector<double>(n - 1, -1.0)};
        const auto e = spectral::sym_tridiag_eigenvalues(t);
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double exact = 2.0 - 2.0 * std::cos((j + 1) * std::numbers::pi / (n + 1));
            worst = std::max(worst, std::abs(e[j] - exact));
        }
        r.check(b, "Toeplitz N=50 closed form", worst, 1e-12);
    }
    std::mt19937_64 rng(20260214);
    {
        double worst = 0.0;
        for (std::size_t n = 5; n <= 10; ++n) {
            const auto m = random_matrix(rng, n);
            const auto bis = spectral::sym_tridiag_eigenvalues(m);
            const auto brute = spectral::dense_eig_bruteforce(m);
            for (std::size_t j = 0; j < n; ++j) worst = std::max(worst, std::abs(bis[j] - brute[j]));
        }
        r.check(b, "bisection against brute force, 5x5..10x10", worst, 1e-10);
    }
    {
        int violations = 0;
        for (int trial = 0; trial < 50; ++trial) {
            const auto m = random_matrix(rng, 12);
            spectral::SymTridiag lead{{m.diag.begin(), m.diag.end() - 1}, {m.offdiag.begin(), m.offdiag.end() - 1}};
            const auto big = spectral::sym_tridiag_eigenvalues(m);
            const auto small = spectral::sym_tridiag_eigenvalues(lead);
            for (std::size_t j = 0; j < small.size(); ++j) {
                // Ties are allowed: a gap below double resolution cannot be resolved.
                if (!(big[j] <= small[j] && small[j] <= big[j + 1])) ++violations;
            }
        }
        r.check_exact(b, "interlacing on 50 random matrices", violations == 0,
                      std::to_string(violations) + " violations");
    }
}

struct Block {
    const char* name;
    std::function<void(const RunConfig&, Report&)> run;
};

const std::vector<Block>& blocks() {
    static const std::vector<Block> list = {
        {"table1", block_table1},
        {"kratzer", [](const RunConfig&, Report& r) { block_kratzer(r); }},
        {"morse", [](const RunConfig&, Report& r) { block_morse(r); }},
        {"pulse", [](const RunConfig&, Report& r) { block_pulse(r); }},
        {"oracle", [](const RunConfig&, Report& r) { block_oracle(r); }},
        {"wavefunctions", [](const RunConfig&, Report& r) { block_wavefunctions(r); }},
        {"orthopoly", [](const RunConfig&, Report& r) { block_orthopoly(r); }},
        {"eigen", [](const RunConfig&, Report& r) { block_eigen(r); }},
    };
    return list;
}

}  // namespace

int cmd_verify(const RunConfig& config, std::ostream& out) {
    if (!config.only.empty()) {
        const auto& list = blocks();
        const bool known = std::any_of(list.begin(), list.end(), [&](const Block& bl) { return config.only == bl.name; });
        if (!known) {
            throw DomainError("unknown verify block '" + config.only +
                              "' (table1, kratzer, morse, pulse, oracle, wavefunctions, orthopoly, eigen)");
        }
    }
    Report report(out);
    if (config.perturb_recursion != 0.0) {
        out << "# pulse recursion D_n scaled by 1 + " << format_number(config.perturb_recursion) << '\n';
    }
    for (const auto& bl : blocks()) {
        if (!config.only.empty() && config.only != bl.name) continue;
        try {
            bl.run(config, report);
        } catch (const std::exception& e) {
            report.error(bl.name, e.what());
        }
    }
    report.summary();
    return report.failed() == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace tra::cli
