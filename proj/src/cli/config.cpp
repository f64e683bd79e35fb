#include "tra/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "tra/cli/csv.hpp"
#include "tra/errors.hpp"

namespace tra::cli {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownFields = {
    "schema_version", "model", "energy", "Z", "ell", "alpha", "beta", "A", "B", "ratio", "lambda", "N",
    "kmax", "count", "k", "sign", "grid", "units", "out", "provenance", "only", "perturb_recursion", "figure"};

template <typename T>
T field(const json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw DomainError(std::string("config field '") + key + "' has the wrong type");
    }
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw DomainError("cannot parse " + what + " from '" + text + "'");
    }
    return v;
}

}  // namespace

double RunConfig::energy_or_default() const {
    if (energy) return *energy;
    switch (model) {
        case models::ModelKind::kratzer: return -0.5;
        case models::ModelKind::morse: return -2.0 * lambda * lambda;
        case models::ModelKind::pulse: return -1.0 * lambda * lambda;
    }
    return -1.0;
}

double RunConfig::beta_or_default() const {
    if (beta) return *beta;
    return model == models::ModelKind::kratzer ? 18.0 : -5.0 * std::sqrt(5.0);
}

std::vector<int> RunConfig::truncations(int fallback) const {
    if (N && !N->empty()) return *N;
    return {fallback};
}

GridSpec RunConfig::grid_or_default() const {
    if (grid) return *grid;
    switch (model) {
        case models::ModelKind::kratzer: return {0.01, 40.0, 4000};
        case models::ModelKind::morse: return {-8.0, 25.0, 3301};
        case models::ModelKind::pulse: return {-15.0, 15.0, 3001};
    }
    return {-15.0, 15.0, 3001};
}

models::ModelKind parse_model(const std::string& name) {
    if (name == "kratzer") return models::ModelKind::kratzer;
    if (name == "morse") return models::ModelKind::morse;
    if (name == "pulse") return models::ModelKind::pulse;
    throw DomainError("unknown model '" + name + "' (expected kratzer, morse or pulse)");
}

Units parse_units(const std::string& name) {
    if (name == "atomic") return Units::atomic;
    if (name == "neg-lambda2") return Units::neg_lambda2;
    if (name == "lambda2") return Units::lambda2;
    throw DomainError("unknown units '" + name + "' (expected atomic, neg-lambda2 or lambda2)");
}

const char* units_name(Units units) {
    switch (units) {
        case Units::atomic: return "atomic";
        case Units::neg_lambda2: return "neg-lambda2";
        case Units::lambda2: return "lambda2";
    }
    return "atomic";
}

double convert_energy(double energy, Units units, double lambda) {
    switch (units) {
        case Units::atomic: return energy;
        case Units::neg_lambda2: return -energy / (lambda * lambda);
        case Units::lambda2: return energy / (lambda * lambda);
    }
    return energy;
}

GridSpec parse_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) {
        throw DomainError("grid must be x0:x1:n, got '" + text + "'");
    }
    GridSpec g;
    g.x0 = parse_double(parts[0], "grid x0");
    g.x1 = parse_double(parts[1], "grid x1");
    const double n = parse_double(parts[2], "grid n");
    if (n != std::floor(n) || n < 2) {
        throw DomainError("grid n must be an integer >= 2");
    }
    g.n = static_cast<std::size_t>(n);
    if (!(g.x1 > g.x0)) {
        throw DomainError("grid needs x1 > x0");
    }
    return g;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double v = parse_double(item, "integer list entry");
        if (v != std::floor(v)) {
            throw DomainError("expected an integer, got '" + item + "'");
        }
        values.push_back(static_cast<int>(v));
    }
    if (values.empty()) {
        throw DomainError("empty integer list");
    }
    return values;
}

RunConfig config_from_json(const json& doc) {
    if (!doc.is_object()) {
        throw DomainError("config must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (!kKnownFields.count(key)) {
            throw DomainError("unknown config field '" + key + "'");
        }
    }
    if (doc.contains("schema_version") && field<int>(doc, "schema_version") != kSchemaVersion) {
        throw DomainError("unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    }
    RunConfig c;
    if (doc.contains("model")) c.model = parse_model(field<std::string>(doc, "model"));
    if (doc.contains("energy")) c.energy = field<double>(doc, "energy");
    if (doc.contains("Z")) c.Z = field<double>(doc, "Z");
    if (doc.contains("ell")) c.ell = field<int>(doc, "ell");
    if (doc.contains("alpha")) c.alpha = field<double>(doc, "alpha");
    if (doc.contains("beta")) c.beta = field<double>(doc, "beta");
    if (doc.contains("A")) c.A = field<double>(doc, "A");
    if (doc.contains("B")) c.B = field<double>(doc, "B");
    if (doc.contains("ratio")) c.ratio = field<double>(doc, "ratio");
    if (doc.contains("lambda")) c.lambda = field<double>(doc, "lambda");
    if (doc.contains("N")) {
        const auto& n = doc.at("N");
        c.N = n.is_array() ? field<std::vector<int>>(doc, "N") : std::vector<int>{field<int>(doc, "N")};
    }
    if (doc.contains("kmax")) c.kmax = field<int>(doc, "kmax");
    if (doc.contains("count")) c.count = field<int>(doc, "count");
    if (doc.contains("k")) c.k = field<int>(doc, "k");
    if (doc.contains("sign")) {
        const auto s = field<std::string>(doc, "sign");
        if (s == "positive") {
            c.sign = models::AmplitudeSign::positive;
        } else if (s == "negative") {
            c.sign = models::AmplitudeSign::negative;
        } else {
            throw DomainError("sign must be positive or negative");
        }
    }
    if (doc.contains("grid")) c.grid = parse_grid(field<std::string>(doc, "grid"));
    if (doc.contains("units")) c.units = parse_units(field<std::string>(doc, "units"));
    if (doc.contains("out")) c.out = field<std::string>(doc, "out");
    if (doc.contains("provenance")) c.provenance = field<bool>(doc, "provenance");
    if (doc.contains("only")) c.only = field<std::string>(doc, "only");
    if (doc.contains("perturb_recursion")) c.perturb_recursion = field<double>(doc, "perturb_recursion");
    if (doc.contains("figure")) c.figure = field<int>(doc, "figure");
    return c;
}

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot open config file '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw DomainError("malformed config file '" + path + "': " + e.what());
    }
}

std::vector<std::string> describe(const RunConfig& c) {
    std::vector<std::string> lines;
    auto add = [&](const std::string& key, const std::string& value) { lines.push_back("# " + key + "=" + value); };
    auto num = [](double v) { return format_number(v); };
    std::string ns;
    for (int n : c.truncations(100)) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    const auto g = c.grid_or_default();
    add("schema_version", std::to_string(kSchemaVersion));
    add("model", models::model_name(c.model));
    add("energy", num(c.energy_or_default()));
    add("Z", num(c.Z));
    add("ell", std::to_string(c.ell));
    add("alpha", num(c.alpha));
    add("beta", num(c.beta_or_default()));
    add("A", num(c.A));
    add("B", num(c.B));
    add("ratio", num(c.ratio));
    add("lambda", num(c.lambda));
    add("N", c.N ? ns : ns + " (command default)");
    add("kmax", std::to_string(c.kmax));
    add("count", std::to_string(c.count));
    add("k", std::to_string(c.k));
    add("sign", c.sign == models::AmplitudeSign::positive ? "positive" : "negative");
    add("grid", num(g.x0) + ":" + num(g.x1) + ":" + std::to_string(g.n));
    add("units", units_name(c.units));
    add("tail_tolerance", "1e-10");
    add("pulse_mu_scan", "1e-3 step 0.02");
    add("pulse_pps_stability", "1e-9 (N against 2N)");
    return lines;
}

}  // namespace tra::cli
