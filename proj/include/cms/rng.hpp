// Counter-based splittable random streams. Every Monte Carlo routine in the
// library derives one stream per sample from (seed, operation label, sample
// index), so results do not depend on how work is partitioned across tasks.
#pragma once

#include <cstdint>
#include <string_view>

namespace cms::rng {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

/// A keyed Weyl counter pushed through the SplitMix64 finalizer.
/// Streams with distinct keys are statistically independent.
class Stream {
  public:
    explicit Stream(std::uint64_t key) : key_(key) {}

    std::uint64_t next_u64() { return mix64(key_ + kGolden * ++counter_); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Uniform index in [0, n) without modulo bias (Lemire reduction).
    std::uint64_t next_index(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Derive the sub-stream for sample `index` of the operation named `label`.
inline Stream derive_stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
    std::uint64_t k = mix64(seed ^ fnv1a(label));
    k = mix64(k + kGolden * (index + 1));
    return Stream(k);
}

}  // namespace cms::rng
