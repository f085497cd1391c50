// Deterministic random helpers. All randomness in the project flows through
// a seeded mt19937_64; the bounded/shuffle/normal helpers below are hand-pinned
// so outputs are identical across standard library implementations.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace stego {

using Rng = std::mt19937_64;

inline uint64_t rand_u64(Rng& rng) { return rng(); }

// Unbiased integer in [0, n). Lemire-style rejection on the top bits.
inline uint64_t rand_below(Rng& rng, uint64_t n) {
    if (n <= 1) return 0;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline int rand_int(Rng& rng, int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(rand_below(rng, static_cast<uint64_t>(hi - lo + 1)));
}

inline double rand_unit(Rng& rng) {
    return (rng() >> 11) * (1.0 / 9007199254740992.0);  // 53-bit mantissa in [0,1)
}

inline bool rand_chance(Rng& rng, double p) { return rand_unit(rng) < p; }

// Box-Muller, pinned (no std::normal_distribution).
inline double rand_normal(Rng& rng, double mean = 0.0, double stddev = 1.0) {
    double u1 = rand_unit(rng);
    double u2 = rand_unit(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586 * u2);
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        const size_t j = static_cast<size_t>(rand_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Stable mixing for deriving sub-seeds (splitmix64 finalizer).
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
    uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace stego
