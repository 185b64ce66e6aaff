#pragma once

#include <cstdint>

namespace photon_ledger {

/// SplitMix64 (Steele, Lea, Flood 2014). The generator identity is part of the
/// reproducibility contract of random files: the same seed must give the same
/// bits on every platform, which rules out the unspecified std distributions.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Independent stream derived from this one.
    constexpr SplitMix64 split() noexcept { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace photon_ledger
