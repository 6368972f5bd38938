#pragma once

#include "vad/types.hpp"

#include <cstdint>
#include <random>

namespace vad {

/// Deterministic random source. Distribution sampling is implemented by hand
/// (std:: distributions are not bit-stable across standard libraries); the
/// mt19937_64 engine itself is fully specified.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n);

    /// Standard normal via Box-Muller.
    double gaussian();

    /// Uniform direction on the unit sphere.
    Vec3 unit_vector();

    /// Independent stream derived from a base seed and a stream id; used to
    /// make per-item sampling order-independent.
    static Rng fork(std::uint64_t seed, std::uint64_t stream);

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer; good enough to decorrelate fork streams.
std::uint64_t hash_mix(std::uint64_t x);

} // namespace vad
