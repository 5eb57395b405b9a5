#pragma once

#include <cstdint>

namespace riset {

// splitmix64: tiny deterministic generator with identical output on every
// platform, unlike <random> distributions. Used wherever reproducibility
// across toolchains matters (seeded checks, test instance generation).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from 0..bound-1 by rejection, so there is no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = bound * (~0ull / bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    // True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

// Stream-splitting: derives an independent seed for substream `index`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mix(master ^ (0xA0761D6478BD642Full * (index + 1)));
    return mix.next();
}

}  // namespace riset
