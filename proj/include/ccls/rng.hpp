#pragma once

#include <cstdint>
#include <random>

namespace ccls {

// Deterministic seeded randomness. std::mt19937_64 output is pinned by the
// standard, but the standard *distributions* are not, so every helper here
// draws raw engine words and reduces them itself. Two runs with the same
// seed produce identical streams on any conforming platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Uniform in [0, n), n >= 1. Rejection sampling, no modulo bias.
    uint64_t below(uint64_t n) {
        if (n <= 1)
            return 0;
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [lo, hi] inclusive.
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (eng_() >> 63) != 0; }

    // Independent substream: mixes the stream id through splitmix64 so that
    // fork(0), fork(1), ... do not overlap in any obvious way.
    Rng fork(uint64_t stream) const {
        uint64_t z = base_seed_mix_ + (stream + 1) * 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return Rng(z ^ (z >> 31));
    }

    explicit Rng(uint64_t seed, uint64_t mix) : eng_(seed), base_seed_mix_(mix) {}

  private:
    std::mt19937_64 eng_;
    uint64_t base_seed_mix_ = 0;

    friend Rng seeded_rng(uint64_t);
};

inline Rng seeded_rng(uint64_t seed) {
    Rng r(seed);
    r.base_seed_mix_ = seed;
    return r;
}

} // namespace ccls
