#pragma once

#include <cstdint>

namespace sgl {

// SplitMix64: seedable, splittable 64-bit generator. All randomized operations
// take an explicit seed so experiments are bit-reproducible across platforms
// (std::mt19937 distributions are not portable, this is).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0, n), unbiased via rejection.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent child stream; deterministic in (current state, index).
    SplitMix64 split(std::uint64_t index) const {
        return SplitMix64(mix(state_ + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

private:
    std::uint64_t state_;
};

} // namespace sgl
