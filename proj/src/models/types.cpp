#include "tra/models/types.hpp"

namespace tra::models {

const char* model_name(ModelKind kind) noexcept {
    switch (kind) {
        case ModelKind::kratzer: return "kratzer";
        case ModelKind::morse: return "morse";
        case ModelKind::pulse: return "pulse";
    }
    return "unknown";
}

ModelKind kind_of(const ModelParams& params) noexcept {
    return static_cast<ModelKind>(params.index());
}

}  // namespace tra::models
