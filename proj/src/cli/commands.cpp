#include "tra/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tra/cli/csv.hpp"
#include "tra/errors.hpp"
#include "tra/models/kratzer.hpp"
#include "tra/models/morse.hpp"
#include "tra/models/pulse.hpp"

namespace tra::cli {

using models::ModelKind;

namespace {

void write_provenance(const RunConfig& config, const char* command, CsvWriter& csv) {
    if (!config.provenance) return;
    csv.comment(std::string("tra ") + command);
    for (const auto& line : describe(config)) csv.comment(line);
}

int single_truncation(const RunConfig& config, int fallback) {
    const auto ns = config.truncations(fallback);
    if (ns.size() != 1) {
        throw DomainError("this command takes a single truncation N");
    }
    return ns.front();
}

models::PulseParams pulse_params(const RunConfig& c) { return {c.A, c.B, c.lambda}; }

// Index of the level at `energy` in a pulse spectrum.
int pulse_level_at(const std::vector<double>& spectrum, double energy) {
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        if (std::abs(spectrum[k] - energy) <= 1e-9 * std::abs(energy)) return static_cast<int>(k);
    }
    throw InconsistentStateError("pulse: the PPS value does not reproduce the requested energy");
}

}  // namespace

int cmd_pps(const RunConfig& c, std::ostream& out) {
    CsvWriter csv(out);
    const double energy = c.energy_or_default();
    models::PpsResult result;
    switch (c.model) {
        case ModelKind::kratzer:
            result = models::kratzer_pps(energy, c.Z, c.ell);
            break;
        case ModelKind::morse:
            result = models::morse_pps(energy, c.alpha, c.lambda, c.kmax);
            break;
        case ModelKind::pulse: {
            models::PulsePpsOptions o;
            o.truncation = single_truncation(c, 200);
            o.count = c.count;
            o.sign = c.sign;
            result = models::pulse_pps(energy, c.ratio, c.lambda, o);
            break;
        }
    }
    write_provenance(c, "pps", csv);
    if (c.provenance) {
        if (!result.status.empty()) csv.comment("status: " + result.status);
        for (const auto& e : result.excluded) {
            csv.comment("excluded k=" + std::to_string(e.k) + " rho=" + format_number(e.rho));
        }
    }
    csv.row({"k", "rho_k", "model", "energy", "N"});
    for (const auto& e : result.entries) {
        csv.row({std::to_string(e.k), format_number(e.rho), models::model_name(result.model), format_number(energy),
                 std::to_string(result.truncation)});
    }
    return kExitOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    CsvWriter csv(out);
    const char* units = units_name(c.units);
    // One column of energies per truncation (a single column except for pulse).
    std::vector<std::vector<double>> columns;
    std::vector<int> ns;
    switch (c.model) {
        case ModelKind::kratzer:
            columns.push_back(models::kratzer_spectrum({c.Z, c.beta_or_default(), c.ell}, c.kmax));
            break;
        case ModelKind::morse:
            columns.push_back(models::morse_spectrum({c.alpha, c.beta_or_default(), c.lambda}));
            break;
        case ModelKind::pulse:
            ns = c.truncations(100);
            for (int n : ns) {
                models::PulseSpectrumOptions o;
                o.truncation = n;
                o.d_perturbation = c.perturb_recursion;
                columns.push_back(models::pulse_spectrum(pulse_params(c), o));
            }
            break;
    }
    write_provenance(c, "spectrum", csv);
    std::vector<std::string> header{"k"};
    if (columns.size() == 1) {
        header.push_back("E_k");
    } else {
        for (int n : ns) header.push_back("E_k_N" + std::to_string(n));
    }
    header.push_back("units");
    csv.row(header);
    std::size_t rows = 0;
    for (const auto& col : columns) rows = std::max(rows, col.size());
    for (std::size_t k = 0; k < rows; ++k) {
        std::vector<std::string> cells{std::to_string(k)};
        for (const auto& col : columns) {
            cells.push_back(k < col.size() ? format_number(convert_energy(col[k], c.units, c.lambda)) : "");
        }
        cells.push_back(units);
        csv.row(cells);
    }
    return kExitOk;
}

int cmd_wavefunction(const RunConfig& c, std::ostream& out) {
    CsvWriter csv(out);
    const auto g = c.grid_or_default();
    const auto grid = uniform_grid(g.x0, g.x1, g.n);
    const int n = single_truncation(c, 100);
    // With an explicit energy the state is the k-th member of the PPS at that
    // energy; otherwise it is level k of the configured potential.
    const bool at_energy = c.energy.has_value();
    GridFunction wf;
    switch (c.model) {
        case ModelKind::kratzer: {
            models::KratzerParams p{c.Z, c.beta_or_default(), c.ell};
            if (at_energy) {
                const auto pps = models::kratzer_pps(*c.energy, c.Z, c.ell);
                const auto it = std::find_if(pps.entries.begin(), pps.entries.end(),
                                             [&](const models::PpsEntry& e) { return e.k == c.k; });
                if (it == pps.entries.end()) {
                    throw DomainError("k = " + std::to_string(c.k) + " is not in the Kratzer PPS at this energy");
                }
                p.beta = it->rho;
            }
            models::KratzerOptions o;
            o.truncation = n;
            wf = models::kratzer_wavefunction(c.k, p, grid, o);
            break;
        }
        case ModelKind::morse: {
            models::MorseParams p{c.alpha, c.beta_or_default(), c.lambda};
            if (at_energy) {
                if (c.k < 0) throw DomainError("k must be non-negative");
                p.beta = models::morse_pps(*c.energy, c.alpha, c.lambda, c.k).entries.back().rho;
            }
            wf = models::morse_wavefunction(c.k, p, grid, n);
            break;
        }
        case ModelKind::pulse: {
            models::PulseSpectrumOptions o;
            o.truncation = n;
            models::PulseParams p = pulse_params(c);
            int level = c.k;
            if (at_energy) {
                if (c.k < 0) throw DomainError("k must be non-negative");
                models::PulsePpsOptions po;
                po.count = c.k + 1;
                po.sign = c.sign;
                const auto pps = models::pulse_pps(*c.energy, c.ratio, c.lambda, po);
                if (static_cast<int>(pps.entries.size()) <= c.k) {
                    throw DomainError("k = " + std::to_string(c.k) + " is not in the pulse PPS at this energy");
                }
                const double a = pps.entries[static_cast<std::size_t>(c.k)].rho;
                p = {a, c.ratio * a, c.lambda};
                level = pulse_level_at(models::pulse_spectrum(p, o), *c.energy);
            }
            wf = models::pulse_wavefunction(level, p, grid, o);
            break;
        }
    }
    write_provenance(c, "wavefunction", csv);
    if (c.provenance) csv.comment("state_energy=" + format_number(wf.energy));
    csv.row({c.model == ModelKind::kratzer ? "r" : "x", "psi", "V"});
    for (std::size_t i = 0; i < wf.x.size(); ++i) {
        csv.row({format_number(wf.x[i]), format_number(wf.psi[i]), format_number(wf.potential[i])});
    }
    return kExitOk;
}

int cmd_figure(const RunConfig& c, std::ostream& out) {
    CsvWriter csv(out);
    const double l2 = c.lambda * c.lambda;
    if (c.figure == 4) {
        // Lowest PPS branches against energy at B/A = -0.7, E in [-10, 0) (units of lambda^2).
        constexpr double kRatio = -0.7;
        constexpr int kPoints = 100;
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < kPoints; ++i) {
            const double e = (i - kPoints) / 10.0;
            models::PulsePpsOptions o;
            o.truncation = single_truncation(c, 200);
            o.count = c.count;
            o.sign = c.sign;
            const auto pps = models::pulse_pps(e * l2, kRatio, c.lambda, o);
            std::vector<std::string> cells{format_number(e)};
            for (int j = 0; j < c.count; ++j) {
                cells.push_back(j < static_cast<int>(pps.entries.size()) ? format_number(pps.entries[j].rho) : "");
            }
            rows.push_back(std::move(cells));
        }
        write_provenance(c, "figure 4", csv);
        std::vector<std::string> header{"E_over_lambda2"};
        for (int j = 0; j < c.count; ++j) header.push_back("A_" + std::to_string(j));
        csv.row(header);
        for (const auto& r : rows) csv.row(r);
        return kExitOk;
    }
    if (c.figure == 5) {
        // Spectrum against B/A in [-1, 1] at fixed A.
        constexpr int kPoints = 41;
        models::PulseSpectrumOptions o;
        o.truncation = single_truncation(c, 100);
        o.d_perturbation = c.perturb_recursion;
        std::vector<double> ratios;
        std::vector<std::vector<double>> spectra;
        std::size_t levels = 0;
        for (int i = 0; i < kPoints; ++i) {
            const double ratio = (i - 20) / 20.0;
            ratios.push_back(ratio);
            spectra.push_back(models::pulse_spectrum({c.A, ratio * c.A, c.lambda}, o));
            levels = std::max(levels, spectra.back().size());
        }
        write_provenance(c, "figure 5", csv);
        std::vector<std::string> header{"ratio"};
        for (std::size_t k = 0; k < levels; ++k) header.push_back("E_" + std::to_string(k));
        header.push_back("units");
        csv.row(header);
        for (std::size_t i = 0; i < ratios.size(); ++i) {
            std::vector<std::string> cells{format_number(ratios[i])};
            for (std::size_t k = 0; k < levels; ++k) {
                cells.push_back(k < spectra[i].size()
                                    ? format_number(convert_energy(spectra[i][k], c.units, c.lambda))
                                    : "");
            }
            cells.push_back(units_name(c.units));
            csv.row(cells);
        }
        return kExitOk;
    }
    throw DomainError("figure id must be 4 or 5");
}

}  // namespace tra::cli
