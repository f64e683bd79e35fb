#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tra/errors.hpp"
#include "tra/grid_function.hpp"
#include "tra/models/kratzer.hpp"
#include "tra/models/morse.hpp"
#include "tra/models/pulse.hpp"
#include "tra/oracle.hpp"

using namespace tra::models;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const double kRoot5 = std::sqrt(5.0);

// Regression values at E = -1, lambda = 1, N = 200 (stable against N = 400).
const double kPpsPositive[] = {127.321204018628, 419.096633322826, 881.770180933959, 1515.35109128262};
const double kPpsNegative[] = {4.07768787644726, 11.3051540104679, 22.3501966822049, 37.3016000895502};

// Published N = 100 column, as -E.
const double kTable1[] = {32.769451481023, 23.244111726155, 15.147885796825,
                          8.556078499364, 3.599423896564, 0.569839032667};

double tail_ratio(const BoundState& s) {
    double peak = 0.0;
    for (double c : s.coefficients) peak = std::max(peak, std::abs(c));
    return std::abs(s.coefficients.back()) / peak;
}

void check_state(const tra::GridFunction& wf, int k, const tra::oracle::Potential& v, bool radial,
                 double residual_tol = 1e-5) {
    CHECK(std::abs(tra::trapezoid_norm(wf.x, wf.psi) - 1.0) < 1e-10);
    CHECK(tra::count_nodes(wf.psi) == k);
    CHECK((radial ? tra::far_end_decay_ratio(wf.psi) : tra::endpoint_decay_ratio(wf.psi)) < 1e-8);
    CHECK(tra::oracle::hamiltonian_residual(wf, v, wf.energy) <= residual_tol);
}

}  // namespace

// Kratzer

TEST_CASE("kratzer potential") {
    const KratzerParams p{-5.0, 18.0, 1};
    CHECK(kratzer_potential(1.0, p) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(kratzer_potential(1.0, p, true) == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(kratzer_potential(2.0, KratzerParams{-5.0, 0.0, 0}) == -2.5);
    CHECK(std::abs(kratzer_potential(1e12, p)) < 1e-11);
    CHECK_THROWS_AS(kratzer_potential(0.0, p), tra::DomainError);
    CHECK_THROWS_AS(kratzer_potential(-1.0, p), tra::DomainError);
}

TEST_CASE("kratzer PPS at E = -1/2") {
    const auto pps = kratzer_pps(-0.5, -5.0, 1);
    const double want[] = {18.0, 10.0, 4.0, 0.0, -2.0};
    REQUIRE(pps.entries.size() == 5);
    CHECK(pps.truncation == 4);
    CHECK(pps.excluded.empty());
    for (int k = 0; k < 5; ++k) {
        CHECK(pps.entries[k].k == k);
        CHECK(std::abs(pps.entries[k].rho - want[k]) < 1e-12);
    }
}

TEST_CASE("kratzer PPS guards") {
    const auto shallow = kratzer_pps(-0.5, -0.1, 0);
    CHECK(shallow.entries.empty());
    CHECK_FALSE(shallow.status.empty());

    // 2Z/lambda = -5.5, l = 0: beta_5 = (0.5)(-0.5) sits on the critical value -1/4.
    const auto edge = kratzer_pps(-0.5, -5.5, 0);
    REQUIRE(edge.excluded.size() == 1);
    CHECK(edge.excluded[0].k == 5);
    CHECK(edge.entries.size() == 5);

    CHECK_THROWS_AS(kratzer_pps(0.0, -5.0, 1), tra::DomainError);
    CHECK_THROWS_AS(kratzer_pps(0.3, -5.0, 1), tra::DomainError);
    CHECK_THROWS_AS(kratzer_pps(-0.5, -5.0, -1), tra::DomainError);
}

TEST_CASE("kratzer spectrum") {
    const auto e = kratzer_spectrum({-5.0, 18.0, 1}, 5);
    REQUIRE(e.size() == 6);
    CHECK(rel(e[0], -0.5) < 1e-14);
    CHECK(rel(e[1], -12.5 / 36.0) < 1e-14);
    CHECK(rel(e[2], -12.5 / 49.0) < 1e-14);
    for (std::size_t k = 0; k + 1 < e.size(); ++k) CHECK(e[k + 1] > e[k]);
    CHECK(rel(kratzer_spectrum({-5.0, 0.0, 1}, 0)[0], -3.125) < 1e-14);

    CHECK_THROWS_AS(kratzer_spectrum({5.0, 18.0, 1}, 2), tra::DomainError);
    CHECK_THROWS_AS(kratzer_spectrum({-5.0, -2.25, 1}, 2), tra::SupercriticalCouplingError);
    CHECK_THROWS_AS(kratzer_spectrum({-5.0, -3.0, 1}, 2), tra::SupercriticalCouplingError);
}

TEST_CASE("kratzer round trip over several energies") {
    for (double energy : {-0.5, -0.125, -2.0}) {
        for (int ell : {0, 1, 3}) {
            const auto pps = kratzer_pps(energy, -5.0, ell);
            for (const auto& entry : pps.entries) {
                const auto e = kratzer_spectrum({-5.0, entry.rho, ell}, entry.k);
                CHECK(rel(e[entry.k], energy) < 1e-12);
            }
        }
    }
}

TEST_CASE("kratzer bound state coefficients terminate for the default basis") {
    const auto pps = kratzer_pps(-0.5, -5.0, 1);
    for (int k = 0; k <= 4; ++k) {
        const KratzerParams p{-5.0, pps.entries[k].rho, 1};
        const auto s = kratzer_bound_state(k, p);
        CHECK(s.coefficients.size() == 100);
        CHECK(s.coefficients[0] == 1.0);
        CHECK(rel(s.energy, -0.5) < 1e-12);
        CHECK(s.basis_scale == doctest::Approx(2.0));
        for (std::size_t n = k + 1; n < s.coefficients.size(); ++n) CHECK(s.coefficients[n] == 0.0);
        CHECK(tail_ratio(s) <= kTailTolerance);
    }
}

TEST_CASE("kratzer bound state errors") {
    const KratzerParams p{-5.0, 18.0, 1};
    KratzerOptions small;
    small.truncation = 10;
    CHECK_THROWS_AS(kratzer_bound_state(0, p, small), tra::DomainError);
    // A small basis index decays like n^{-(nu+1)/2}.
    KratzerOptions slow;
    slow.nu = 0.5;
    try {
        kratzer_bound_state(1, KratzerParams{-5.0, 10.0, 1}, slow);
        FAIL("expected a truncation error");
    } catch (const tra::TruncationError& e) {
        CHECK(e.suggested_n() == 200);
    }
    CHECK_THROWS_AS(kratzer_bound_state(0, KratzerParams{-5.0, -3.0, 1}), tra::SupercriticalCouplingError);
}

TEST_CASE("kratzer wavefunctions at E = -1/2") {
    const auto pps = kratzer_pps(-0.5, -5.0, 1);
    const auto grid = tra::uniform_grid(5e-4, 60.0, 120000);
    for (int k = 0; k <= 3; ++k) {
        const KratzerParams p{-5.0, pps.entries[k].rho, 1};
        const auto wf = kratzer_wavefunction(k, p, grid);
        CHECK(rel(wf.energy, -0.5) < 1e-12);
        for (std::size_t i = 0; i < grid.size(); i += 997) {
            CHECK(wf.potential[i] == kratzer_potential(grid[i], p, true));
        }
        check_state(wf, k, tra::oracle::model_potential(p), true);
    }
    CHECK_THROWS_AS(kratzer_wavefunction(0, {-5.0, 18.0, 1}, std::vector<double>{0.0, 0.1, 0.2}), tra::DomainError);
}

TEST_CASE("kratzer wavefunction does not depend on a converged basis index") {
    const KratzerParams p{-5.0, 10.0, 1};
    const auto grid = tra::uniform_grid(5e-4, 60.0, 120000);
    const auto ref = kratzer_wavefunction(1, p, grid);
    for (double nu : {2.0, 4.0}) {
        KratzerOptions o;
        o.nu = nu;
        const auto wf = kratzer_wavefunction(1, p, grid, o);
        double same = 0.0, flipped = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            same = std::max(same, std::abs(wf.psi[i] - ref.psi[i]));
            flipped = std::max(flipped, std::abs(wf.psi[i] + ref.psi[i]));
        }
        CHECK(std::min(same, flipped) < 1e-10);
    }
}

// Morse

TEST_CASE("morse potential") {
    const MorseParams p{5.0, -5.0 * kRoot5, 1.0};
    CHECK(rel(morse_potential(0.0, p), (5.0 - 5.0 * kRoot5) / 2.0) < 1e-14);
    CHECK(std::abs(morse_potential(50.0, p)) < 1e-20);
    for (double lambda : {1.0, 0.5, 2.0}) {
        const MorseParams q{5.0, -7.0, lambda};
        const double xs = -std::log(-q.beta / (2.0 * q.alpha)) / lambda;
        const double vmin = -lambda * lambda * q.beta * q.beta / (8.0 * q.alpha);
        CHECK(rel(morse_potential(xs, q), vmin) < 1e-13);
        CHECK(morse_potential(xs + 1e-3, q) > vmin);
        CHECK(morse_potential(xs - 1e-3, q) > vmin);
    }
}

TEST_CASE("morse PPS at E = -2") {
    const auto pps = morse_pps(-2.0, 5.0, 1.0, 6);
    REQUIRE(pps.entries.size() == 7);
    CHECK(rel(pps.entries[0].rho, -5.0 * kRoot5) < 1e-14);
    for (std::size_t k = 0; k < pps.entries.size(); ++k) {
        CHECK(pps.entries[k].rho < 0.0);
        CHECK(rel(pps.entries[k].rho, -kRoot5 * (2.0 * k + 5.0)) < 1e-14);
        if (k > 0) CHECK(rel(pps.entries[k].rho - pps.entries[k - 1].rho, -2.0 * kRoot5) < 1e-12);
    }
    CHECK_THROWS_AS(morse_pps(-2.0, 0.25, 1.0, 3), tra::DomainError);
    CHECK_THROWS_AS(morse_pps(-2.0, 0.1, 1.0, 3), tra::DomainError);
    CHECK_THROWS_AS(morse_pps(0.0, 5.0, 1.0, 3), tra::DomainError);
}

TEST_CASE("morse spectrum") {
    const auto e = morse_spectrum({5.0, -5.0 * kRoot5, 1.0});
    REQUIRE(e.size() == 2);
    CHECK(e[0] == -2.0);
    CHECK(e[1] == -0.5);
    CHECK(morse_spectrum({5.0, -kRoot5, 1.0}).empty());
    for (double ratio : {-1.5, -2.2, -6.3, -9.0001, -12.7}) {
        const auto s = morse_spectrum({5.0, ratio * kRoot5, 1.0});
        CHECK(s.size() == static_cast<std::size_t>(std::ceil(-0.5 * (1.0 + ratio))));
    }
    const auto scaled = morse_spectrum({5.0, -5.0 * kRoot5, 2.0});
    REQUIRE(scaled.size() == 2);
    CHECK(rel(scaled[0], -8.0) < 1e-14);
}

TEST_CASE("morse round trip") {
    for (double energy : {-2.0, -0.3, -5.5}) {
        for (double lambda : {1.0, 0.7}) {
            const auto pps = morse_pps(energy, 5.0, lambda, 4);
            for (const auto& entry : pps.entries) {
                const auto s = morse_spectrum({5.0, entry.rho, lambda});
                REQUIRE(static_cast<int>(s.size()) > entry.k);
                CHECK(rel(s[entry.k], energy) < 1e-12);
            }
        }
    }
}

TEST_CASE("morse Meixner parameter") {
    const double sc = morse_meixner_sqrt_c(5.0);
    CHECK(rel(sc, (21.0 - 4.0 * kRoot5) / 19.0) < 1e-14);
    for (double alpha : {0.3, 1.0, 5.0, 40.0}) {
        const double r = std::sqrt(alpha);
        const double s = morse_meixner_sqrt_c(alpha);
        CHECK(rel(s, (4.0 * alpha - 4.0 * r + 1.0) / (4.0 * alpha - 1.0)) < 1e-13);
        CHECK(s > 0.0);
        CHECK(s < 1.0);
    }
    CHECK_THROWS_AS(morse_meixner_sqrt_c(0.25), tra::DomainError);
}

TEST_CASE("morse bound states and wavefunctions at E = -2") {
    const auto pps = morse_pps(-2.0, 5.0, 1.0, 3);
    const auto grid = tra::uniform_grid(-30.0, 30.0, 120001);
    for (int k = 0; k <= 3; ++k) {
        const MorseParams p{5.0, pps.entries[k].rho, 1.0};
        const auto s = morse_bound_state(k, p);
        CHECK(rel(s.energy, -2.0) < 1e-12);
        CHECK(s.basis_scale == doctest::Approx(4.0));
        CHECK(tail_ratio(s) <= 1e-10);
        check_state(morse_wavefunction(k, p, grid), k, tra::oracle::model_potential(p), false);
    }
    const MorseParams p{5.0, pps.entries[0].rho, 1.0};
    CHECK_THROWS_AS(morse_bound_state(0, p, 10), tra::DomainError);
    CHECK_THROWS_AS(morse_bound_state(3, MorseParams{5.0, -5.0 * kRoot5, 1.0}), tra::DomainError);
}

// Pulse

TEST_CASE("pulse potential") {
    const PulseParams p{100.0, -50.0, 1.5};
    CHECK(pulse_potential(0.0, p) == doctest::Approx(1.5 * 1.5 * -50.0 / 2.0).epsilon(1e-15));
    CHECK(std::abs(pulse_potential(40.0, p)) < 1e-25);
    CHECK(std::abs(pulse_potential(-40.0, p)) < 1e-25);
    const PulseParams odd{3.0, 0.0, 0.8};
    for (double x : {0.1, 0.9, 2.5}) CHECK(pulse_potential(x, odd) == doctest::Approx(-pulse_potential(-x, odd)));

    double sampled = 0.0;
    for (const double x : tra::uniform_grid(-10.0, 10.0, 200001)) sampled = std::max(sampled, std::abs(pulse_potential(x, p)));
    CHECK(pulse_depth(p) >= sampled);
    CHECK(rel(pulse_depth(p), sampled) < 1e-8);
}

TEST_CASE("pulse PPS regression values at E = -1") {
    const auto pos = pulse_pps(-1.0, 0.7, 1.0);
    REQUIRE(pos.entries.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(rel(pos.entries[k].rho, kPpsPositive[k]) < 1e-9);

    const auto neg = pulse_pps(-1.0, -0.7, 1.0);
    REQUIRE(neg.entries.size() == 4);
    for (int k = 0; k < 4; ++k) CHECK(rel(neg.entries[k].rho, kPpsNegative[k]) < 1e-9);
}

TEST_CASE("pulse PPS agrees with the finite-difference oracle") {
    for (double ratio : {0.7, -0.7}) {
        const auto pps = pulse_pps(-1.0, ratio, 1.0);
        for (const auto& entry : pps.entries) {
            const PulseParams p{entry.rho, ratio * entry.rho, 1.0};
            const auto fd = tra::oracle::fd_bound_states(p, tra::oracle::kPulseGrid, entry.k + 1);
            REQUIRE(static_cast<int>(fd.energies.size()) == entry.k + 1);
            CHECK(rel(fd.energies[entry.k], -1.0) < 1e-3);
        }
    }
}

TEST_CASE("pulse PPS symmetries") {
    PulsePpsOptions negative;
    negative.sign = AmplitudeSign::negative;
    for (double ratio : {0.7, -0.3}) {
        const auto a = pulse_pps(-1.0, ratio, 1.0);
        const auto b = pulse_pps(-1.0, -ratio, 1.0, negative);
        REQUIRE(a.entries.size() == b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            CHECK(b.entries[i].rho < 0.0);
            CHECK(rel(b.entries[i].rho, -a.entries[i].rho) < 1e-12);
        }
    }
    // The amplitudes are dimensionless: PPS(E, lambda) = PPS(E / lambda^2, 1).
    const auto wide = pulse_pps(-4.0, 0.7, 2.0);
    const auto unit = pulse_pps(-1.0, 0.7, 1.0);
    REQUIRE(wide.entries.size() == unit.entries.size());
    for (std::size_t i = 0; i < unit.entries.size(); ++i) {
        CHECK(rel(wide.entries[i].rho, unit.entries[i].rho) < 1e-12);
    }
}

TEST_CASE("pulse round trip") {
    for (double ratio : {0.7, -0.7, 0.0}) {
        const auto pps = pulse_pps(-1.0, ratio, 1.0);
        for (const auto& entry : pps.entries) {
            const auto spec = pulse_spectrum({entry.rho, ratio * entry.rho, 1.0});
            REQUIRE(static_cast<int>(spec.size()) > entry.k);
            CHECK(rel(spec[entry.k], -1.0) < 1e-9);
        }
    }
}

TEST_CASE("pulse PPS errors") {
    PulsePpsOptions small;
    small.truncation = 20;
    CHECK_THROWS_AS(pulse_pps(-1.0, 0.7, 1.0, small), tra::DomainError);
    PulsePpsOptions unstable;
    unstable.truncation = 30;
    try {
        pulse_pps(-1.0, 0.7, 1.0, unstable);
        FAIL("expected a truncation error");
    } catch (const tra::TruncationError& e) {
        CHECK(e.suggested_n() > 30);
    }
    CHECK_THROWS_AS(pulse_pps(0.0, 0.7, 1.0), tra::DomainError);
    CHECK_THROWS_AS(pulse_pps(-1.0, 1.5, 1.0), tra::DomainError);
    CHECK_THROWS_AS(pulse_pps(-1.0, 0.7, -1.0), tra::DomainError);
}

TEST_CASE("pulse spectrum at A = 100, B = -50") {
    const auto e = pulse_spectrum({100.0, -50.0, 1.0});
    REQUIRE(e.size() == 6);
    for (int k = 0; k < 6; ++k) CHECK(rel(-e[k], kTable1[k]) < 1e-11);
    for (int k = 0; k + 1 < 6; ++k) CHECK(e[k] < e[k + 1]);
}

TEST_CASE("pulse spectrum of a shallow barrier-like well is empty") {
    CHECK(pulse_spectrum({1.0, 0.9, 1.0}).empty());
    CHECK(pulse_spectrum({1.0, 0.5, 1.0}).empty());
    const auto fd = tra::oracle::fd_bound_states(PulseParams{1.0, 0.5, 1.0}, tra::oracle::Grid1D{-60.0, 60.0, 24001}, 1);
    CHECK(fd.energies.empty());
    CHECK(fd.short_count);
    CHECK(pulse_spectrum({1.0, 0.0, 1.0}).size() == 1);
}

TEST_CASE("pulse parameter validation") {
    CHECK_THROWS_AS(pulse_spectrum({0.0, 0.0, 1.0}), tra::DomainError);
    CHECK_THROWS_AS(pulse_spectrum({1.0, 2.0, 1.0}), tra::DomainError);
    CHECK_THROWS_AS(pulse_spectrum({1.0, 0.5, 0.0}), tra::DomainError);
    PulseSpectrumOptions o;
    o.truncation = 1;
    CHECK_THROWS_AS(pulse_spectrum({100.0, -50.0, 1.0}, o), tra::DomainError);
    CHECK_THROWS_AS(pulse_bound_state(6, {100.0, -50.0, 1.0}), tra::DomainError);
}

TEST_CASE("pulse wavefunctions for the six levels at A = 100, B = -50") {
    const PulseParams p{100.0, -50.0, 1.0};
    const auto grid = tra::uniform_grid(-30.0, 30.0, 240001);
    for (int k = 0; k < 6; ++k) {
        const auto s = pulse_bound_state(k, p);
        CHECK(tail_ratio(s) <= 1e-10);
        check_state(pulse_wavefunction(k, p, grid), k, tra::oracle::model_potential(p), false);
    }
}

TEST_CASE("pulse wavefunctions at the PPS states") {
    const auto grid = tra::uniform_grid(-30.0, 30.0, 240001);
    for (double ratio : {0.7, -0.7}) {
        const auto pps = pulse_pps(-1.0, ratio, 1.0);
        for (const auto& entry : pps.entries) {
            const PulseParams p{entry.rho, ratio * entry.rho, 1.0};
            const auto wf = pulse_wavefunction(entry.k, p, grid);
            CHECK(rel(wf.energy, -1.0) < 1e-9);
            check_state(wf, entry.k, tra::oracle::model_potential(p), false);
        }
    }
}
