// Deterministic pseudo-random streams.  std::uniform_* distributions are
// implementation-defined, so sweeps that must be byte-identical across
// platforms use this splitmix64 generator and nothing else.
#pragma once

#include <cstdint>

namespace diolab {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n) by rejection on the top bias range; n > 0.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = n * ((~0ULL) / n);
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Independent stream for case `id` under the same master seed.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t id) {
        SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ULL * (id + 1)));
        mix.next();
        return mix;
    }

private:
    std::uint64_t state_;
};

}  // namespace diolab
