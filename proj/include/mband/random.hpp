#pragma once

#include <cstdint>

namespace mband {

/// Seed used by the CLI and the calibration harness when none is given.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based random substream.
///
/// Stream (seed, index) has key  k = mix64(seed ^ mix64(index ^ 0x243F6A8885A308D3)),
/// and its n-th 64-bit draw (n = 0, 1, ...) is  mix64(k + (n + 1) * 0x9E3779B97F4A7C15).
/// Every draw is a pure function of (seed, index, n), so work split across
/// threads by index reproduces the serial results bit for bit.
///
/// Uniforms take the top 53 bits, centred in their cell: ((u >> 11) + 0.5) * 2^-53,
/// which lies strictly inside (0, 1). Normals are normal_quantile(uniform),
/// one uniform per normal.
class RandomStream {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    constexpr RandomStream(std::uint64_t seed, std::uint64_t index) noexcept
        : key_(mix64(seed ^ mix64(index ^ 0x243F6A8885A308D3ULL))) {}

    constexpr std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGamma); }

    constexpr double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    double next_normal() noexcept;

    constexpr std::uint64_t draws() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace mband
