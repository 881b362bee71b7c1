#pragma once

#include "edgesim/units.hpp"

#include <cstdint>
#include <random>

namespace edgesim {

/// Seeded source of motion-factor draws.
///
/// Backed by std::mt19937_64, whose output sequence is pinned by the
/// language standard, so the same seed yields the same draws on every
/// platform. Unit doubles are built from the top 53 bits of each raw
/// output (u = (x >> 11) * 2^-53, uniform in [0, 1)) instead of
/// std::uniform_real_distribution, whose output is not portable.
class AlphaSampler {
public:
    explicit AlphaSampler(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_raw() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double next_unit() {
        constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
        return static_cast<double>(next_raw() >> 11) * kInv53;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Uniform draw from the range. A degenerate range [v, v] yields
/// exactly v; the draw still advances the engine, so the stream
/// position never depends on the range values.
inline MotionFactor sample_alpha(AlphaSampler& rng, const AlphaRange& range) {
    const double unit = rng.next_unit();
    const double alpha = range.low() + unit * (range.high() - range.low());
    return MotionFactor(alpha, range);
}

}  // namespace edgesim
