#include "vad/config.hpp"

#include "vad/errors.hpp"

namespace vad {

AlignVariant align_variant_from_string(const std::string& s) {
    if (s == "orthogonal") return AlignVariant::Orthogonal;
    if (s == "verbatim") return AlignVariant::Verbatim;
    fail(ErrorCode::InvalidConfig, "unknown align variant '" + s + "'");
}

const char* to_string(AlignVariant v) {
    return v == AlignVariant::Orthogonal ? "orthogonal" : "verbatim";
}

void Config::apply_denoise_weights() {
    lambda_d = 10.0;
    lambda_g = 0.1;
    lambda_a = 1.0;
    lambda_p = 1e2;
}

void Config::resolve_scales(double h) {
    if (h <= 0) fail(ErrorCode::InvalidConfig, "min pairwise distance must be positive");
    resolved_t = diffusion_time_t > 0 ? diffusion_time_t : h * h;
    resolved_epsilon = epsilon_split > 0 ? epsilon_split : 1e-4 * h;
}

void Config::validate() const {
    if (lambda_d < 0 || lambda_g < 0 || lambda_a < 0 || lambda_p < 0)
        fail(ErrorCode::InvalidConfig, "energy weights must be nonnegative");
    if (learning_rate <= 0) fail(ErrorCode::InvalidConfig, "learning_rate must be positive");
    if (max_iterations <= 0) fail(ErrorCode::InvalidConfig, "max_iterations must be positive");
    if (grid_resolution < 2) fail(ErrorCode::InvalidConfig, "grid_resolution must be >= 2");
    if (denoise_rounds <= 0) fail(ErrorCode::InvalidConfig, "denoise_rounds must be positive");
    if (diffusion_time_t == 0 || epsilon_split == 0)
        fail(ErrorCode::InvalidConfig, "diffusion scales must be positive (or negative for auto)");
}

} // namespace vad
