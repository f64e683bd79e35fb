#pragma once

// Run configuration shared by every command. A JSON config file and the
// command-line flags are both expressed as JSON objects; flags are merged
// over the file and the result is parsed here, so a flag always wins.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tra/models/pulse.hpp"
#include "tra/models/types.hpp"

namespace tra::cli {

inline constexpr int kSchemaVersion = 1;

enum class Units { atomic, neg_lambda2, lambda2 };

struct GridSpec {
    double x0 = 0.0;
    double x1 = 1.0;
    std::size_t n = 2;
};

struct RunConfig {
    models::ModelKind model = models::ModelKind::pulse;
    std::optional<double> energy;  ///< default per model: -1/2, -2, -1
    double Z = -5.0;
    int ell = 1;
    double alpha = 5.0;
    std::optional<double> beta;    ///< default per model: 18 (Kratzer), -5 sqrt(5) (Morse)
    double A = 100.0;
    double B = -50.0;
    double ratio = 0.7;
    double lambda = 1.0;
    std::optional<std::vector<int>> N;  ///< default 200 for pulse PPS, 100 otherwise
    int kmax = 3;
    int count = 4;
    int k = 0;
    models::AmplitudeSign sign = models::AmplitudeSign::positive;
    std::optional<GridSpec> grid;
    Units units = Units::atomic;
    std::string out;
    bool provenance = false;
    std::string only;
    double perturb_recursion = 0.0;
    int figure = 4;

    double energy_or_default() const;
    double beta_or_default() const;
    std::vector<int> truncations(int fallback) const;
    GridSpec grid_or_default() const;
};

/// Throws DomainError on unknown fields, wrong types or an unsupported schema_version.
RunConfig config_from_json(const nlohmann::json& doc);

/// Reads and parses a config file; unreadable or malformed files throw DomainError.
nlohmann::json load_config_file(const std::string& path);

/// "x0:x1:n"
GridSpec parse_grid(const std::string& text);

/// "15,20,30"
std::vector<int> parse_int_list(const std::string& text);

models::ModelKind parse_model(const std::string& name);
Units parse_units(const std::string& name);
const char* units_name(Units units);

/// Energy expressed in the requested units.
double convert_energy(double energy, Units units, double lambda);

/// Echo of every resolved field, one "# key=value" line each, for provenance.
std::vector<std::string> describe(const RunConfig& config);

}  // namespace tra::cli
