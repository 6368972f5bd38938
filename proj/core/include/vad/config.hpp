#pragma once

#include <cstdint>
#include <string>

namespace vad {

enum class AlignVariant {
    Orthogonal, // (n . d)^2 — penalizes tangential alignment (default)
    Verbatim,   // (1 - n . d)^2 — the printed form, kept for fidelity runs
};

AlignVariant align_variant_from_string(const std::string& s);
const char* to_string(AlignVariant v);

/// Every tunable of the pipeline in one record. Length-scale dependent fields
/// (diffusion_time_t, epsilon_split) are resolved from the cloud via
/// resolve_scales() when left at their negative "auto" sentinel.
struct Config {
    // energy weights
    double lambda_d = 1e3;
    double lambda_g = 0.01;
    double lambda_a = 1.0;
    double lambda_p = 1e2; // used in offset (denoise) mode only

    // diffusion scales; negative = derive from h (min pairwise distance)
    double diffusion_time_t = -1.0; // default h^2
    double epsilon_split = -1.0;    // default 1e-4 * h
    bool epsilon_from_grid = false; // override: epsilon = spacing / 2

    // optimizer
    double learning_rate = 0.01;
    int max_iterations = 1000;

    // grid
    int grid_resolution = 128;

    // denoising
    bool denoise = false;
    int denoise_rounds = 1;

    AlignVariant align_variant = AlignVariant::Orthogonal;

    // bisector sampling; negative = 10 x point count
    std::int64_t bisector_sample_budget = -1;

    std::uint64_t rng_seed = 0;

    /// Applies the noisy-input weight preset from the denoise flag.
    void apply_denoise_weights();

    /// Fills the h-derived defaults given the cloud's min pairwise distance.
    void resolve_scales(double h);

    double resolved_t = 0.0;
    double resolved_epsilon = 0.0;
    std::int64_t resolved_budget = 0;

    void validate() const;
};

} // namespace vad
