#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "tra/cli/commands.hpp"
#include "tra/errors.hpp"

namespace tra::cli {

using nlohmann::json;

namespace {

// Storage for the flags of one subcommand. Only flags that were actually
// given end up in overrides(), which is what lets them beat the config file.
class FlagSet {
public:
    void attach(CLI::App& sub) {
        add(sub, "--model", model_, "kratzer | morse | pulse (default: pulse)");
        add(sub, "--energy", energy_, "fixed energy E < 0, atomic units (default per model: -1/2, -2 lambda^2, -lambda^2)");
        add(sub, "--Z", z_, "Kratzer Coulomb charge (default: -5)");
        add(sub, "--ell", ell_, "Kratzer angular momentum (default: 1)");
        add(sub, "--alpha", alpha_, "Morse alpha > 1/4 (default: 5)");
        add(sub, "--beta", beta_, "Kratzer/Morse beta (default: 18 / -5 sqrt(5))");
        add(sub, "--A", a_, "pulse amplitude A (default: 100)");
        add(sub, "--B", b_, "pulse offset B (default: -50)");
        add(sub, "--ratio", ratio_, "pulse B/A for the PPS (default: 0.7)");
        add(sub, "--lambda", lambda_, "range parameter lambda > 0 (default: 1)");
        add(sub, "--N", n_, "truncation, comma list for pulse spectra (default: 100; 200 for pulse PPS)");
        add(sub, "--kmax", kmax_, "highest k for Kratzer spectra / Morse PPS (default: 3)");
        add(sub, "--count", count_, "number of pulse PPS values (default: 4)");
        add(sub, "--k", k_, "level index for wavefunctions (default: 0)");
        add(sub, "--sign", sign_, "sign branch of the pulse PPS: positive | negative (default: positive)");
        add(sub, "--grid", grid_, "x0:x1:n wavefunction grid (default per model: 0.01:40:4000, -8:25:3301, -15:15:3001)");
        add(sub, "--units", units_, "atomic | neg-lambda2 | lambda2 (default: atomic)");
        add(sub, "--out", out_, "write to PATH instead of standard output");
        add(sub, "--only", only_, "verify: run a single block");
        add(sub, "--perturb-recursion", perturb_, "debug: scale the pulse recursion D_n by 1 + eps (default: 0)");
        options_.push_back({"provenance", sub.add_flag("--provenance", provenance_, "echo resolved settings as # comments")});
        sub.add_option("--config", config_path_, "JSON config file (flags override its fields)");
    }

    void positional(CLI::App& sub, const char* name, const char* key, const char* help) {
        positional_opt_ = sub.add_option(name, positional_, help);
        options_.push_back({key, positional_opt_});
    }

    json overrides() const {
        json j = json::object();
        for (const auto& [key, opt] : options_) {
            if (opt->count() == 0) continue;
            if (key == "provenance") {
                j[key] = provenance_;
            } else if (opt == positional_opt_) {
                j[key] = key == std::string("figure") ? json(std::stoi(positional_)) : json(positional_);
            } else {
                j[key] = value_of(key);
            }
        }
        return j;
    }

    const std::string& config_path() const { return config_path_; }

private:
    template <typename T>
    void add(CLI::App& sub, const char* flag, T& target, const char* help) {
        std::string key = std::string(flag).substr(2);
        for (auto& ch : key) {
            if (ch == '-') ch = '_';
        }
        options_.push_back({key, sub.add_option(flag, target, help)});
    }

    json value_of(const std::string& key) const {
        if (key == "model") return model_;
        if (key == "energy") return energy_;
        if (key == "Z") return z_;
        if (key == "ell") return ell_;
        if (key == "alpha") return alpha_;
        if (key == "beta") return beta_;
        if (key == "A") return a_;
        if (key == "B") return b_;
        if (key == "ratio") return ratio_;
        if (key == "lambda") return lambda_;
        if (key == "N") return parse_int_list(n_);
        if (key == "kmax") return kmax_;
        if (key == "count") return count_;
        if (key == "k") return k_;
        if (key == "sign") return sign_;
        if (key == "grid") return grid_;
        if (key == "units") return units_;
        if (key == "out") return out_;
        if (key == "only") return only_;
        if (key == "perturb_recursion") return perturb_;
        return nullptr;
    }

    std::vector<std::pair<std::string, CLI::Option*>> options_;
    CLI::Option* positional_opt_ = nullptr;
    std::string positional_;
    std::string model_, n_, sign_, grid_, units_, out_, only_, config_path_;
    double energy_ = 0, z_ = 0, alpha_ = 0, beta_ = 0, a_ = 0, b_ = 0, ratio_ = 0, lambda_ = 0, perturb_ = 0;
    int ell_ = 0, kmax_ = 0, count_ = 0, k_ = 0;
    bool provenance_ = false;
};

using Command = int (*)(const RunConfig&, std::ostream&);

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Tridiagonal representation solver: potential parameter spectra, energy spectra and wavefunctions"};
    app.require_subcommand(1);

    struct Entry {
        CLI::App* sub;
        std::unique_ptr<FlagSet> flags;
        Command command;
    };
    std::vector<Entry> entries;
    auto make = [&](const char* name, const char* help, Command command) -> Entry& {
        entries.push_back({app.add_subcommand(name, help), std::make_unique<FlagSet>(), command});
        entries.back().flags->attach(*entries.back().sub);
        return entries.back();
    };
    const char* model_help = "kratzer | morse | pulse";
    auto& pps = make("pps", "potential parameter spectrum at a fixed energy (CSV)", cmd_pps);
    pps.flags->positional(*pps.sub, "which", "model", model_help);
    auto& spectrum = make("spectrum", "bound-state energies (CSV)", cmd_spectrum);
    spectrum.flags->positional(*spectrum.sub, "which", "model", model_help);
    auto& wave = make("wavefunction", "normalized bound-state wavefunction on a grid (CSV)", cmd_wavefunction);
    wave.flags->positional(*wave.sub, "which", "model", model_help);
    auto& figure = make("figure", "pulse figure data: 4 (PPS against E) or 5 (spectrum against B/A)", cmd_figure);
    figure.flags->positional(*figure.sub, "id", "figure", "4 or 5");
    make("verify", "run the verification suite; exit 1 on any failure", cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kExitBadParameters;
    }

    for (const auto& entry : entries) {
        if (!entry.sub->parsed()) continue;
        try {
            json doc = entry.flags->config_path().empty() ? json::object()
                                                          : load_config_file(entry.flags->config_path());
            if (!doc.is_object()) throw DomainError("config must be a JSON object");
            doc.update(entry.flags->overrides());
            const RunConfig config = config_from_json(doc);

            std::ostringstream buffer;
            const int code = entry.command(config, buffer);
            if (config.out.empty()) {
                out << buffer.str();
            } else {
                std::ofstream file(config.out, std::ios::binary);
                if (!file) throw DomainError("cannot write output file '" + config.out + "'");
                file << buffer.str();
            }
            return code;
        } catch (const DomainError& e) {
            err << "error: " << e.what() << '\n';
            return kExitBadParameters;
        } catch (const NumericalFailure& e) {
            err << "numerical failure: " << e.what() << '\n';
            return kExitNumericalFailure;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kExitBadParameters;
        } catch (const std::out_of_range& e) {
            err << "error: " << e.what() << '\n';
            return kExitBadParameters;
        }
    }
    return kExitBadParameters;
}

}  // namespace tra::cli
