#pragma once

#include <cstdint>

namespace qstep {

/// SplitMix64 (Steele, Lea & Flood 2014). Chosen over <random> engines plus
/// distributions because the full algorithm is written out here, so streams
/// are bit-identical on every platform and reports stay reproducible.
///
/// state' = state + 0x9E3779B97F4A7C15
/// z = state'; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///             z = (z ^ z>>27) * 0x94D049BB133111EB
/// output = z ^ z>>31
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

  private:
    std::uint64_t state_;
};

}  // namespace qstep
