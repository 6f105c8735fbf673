#pragma once

#include <cstdint>
#include <random>

namespace phw {

// splitmix64: seed scrambler / stream derivation (public-domain constants).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Seed for the k-th derived stream (independent chains, map-reduce workers).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
}

/* Deterministic RNG wrapper. The engine is std::mt19937_64 (the name recorded
 * in run manifests); bounded integers and unit doubles are mapped by hand
 * because the std::uniform_* distributions are not cross-platform stable. */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    static constexpr const char* generator_name() { return "mt19937_64"; }

    std::uint64_t next_u64() { return eng_(); }

    // Uniform over {0, 1, …, bound−1} by rejection; bound ≥ 1.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound <= 1)
            return 0;
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        for (;;) {
            const std::uint64_t v = eng_();
            if (v < limit)
                return v % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

} // namespace phw
