#pragma once

#include <string>
#include <variant>
#include <vector>

namespace tra::models {

enum class ModelKind { kratzer, morse, pulse };

const char* model_name(ModelKind kind) noexcept;

/// Coulomb plus inverse-square, V(r) = Z/r + beta/(2 r^2).
struct KratzerParams {
    double Z = -1.0;
    double beta = 0.0;
    int ell = 0;
};

/// Generalized Morse, V(x) = (lambda^2/2)(alpha e^{-2 lambda x} + beta e^{-lambda x}).
struct MorseParams {
    double alpha = 1.0;
    double beta = -1.0;
    double lambda = 1.0;
};

/// Hyperbolic pulse, V(x) = (lambda^2/2)(B + A tanh(lambda x)) / cosh^2(lambda x).
struct PulseParams {
    double A = 1.0;
    double B = 0.0;
    double lambda = 1.0;
};

using ModelParams = std::variant<KratzerParams, MorseParams, PulseParams>;

ModelKind kind_of(const ModelParams& params) noexcept;

struct PpsEntry {
    int k = 0;
    double rho = 0.0;
};

/// Potential parameter spectrum at a fixed energy.
struct PpsResult {
    ModelKind model = ModelKind::kratzer;
    double energy = 0.0;
    std::vector<PpsEntry> entries;   ///< sorted by k
    std::vector<PpsEntry> excluded;  ///< candidates rejected by a physical guard
    int truncation = 0;              ///< cap (Kratzer), k_max (Morse) or basis size (pulse)
    std::string status;              ///< empty when nothing noteworthy happened
};

/// Expansion of one bound state in its energy-adapted basis.
struct BoundState {
    int k = 0;
    double energy = 0.0;
    double basis_scale = 0.0;          ///< lambda_k (Kratzer), nu_k (Morse) or mu_k (pulse)
    std::vector<double> coefficients;  ///< f_n / f_0, n = 0..N-1 (pulse: scaled by max|f_n| if f_0 is negligible)
    double normalization = 1.0;        ///< f_0 that makes the sampled wavefunction unit-norm
};

}  // namespace tra::models
