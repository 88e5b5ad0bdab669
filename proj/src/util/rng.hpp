#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace ldtalk {

uint64_t splitmix64(uint64_t x);

// Deterministic random stream. All randomness in the project flows through
// this wrapper so that draws are fully specified by the seed and the call
// sequence, independent of the standard library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1) with 53 bits of mantissa
    double uniform() { return double(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased integer in [lo, hi] via rejection sampling
    int64_t uniform_int(int64_t lo, int64_t hi);

    // standard normal, Box-Muller (first branch only; fully deterministic)
    double normal();

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Derive an independent child stream. The split rule is
    // splitmix64(splitmix64(parent_key) ^ fnv1a64(label)).
    Rng fork(std::string_view label) const;
    Rng fork(uint64_t index) const;

    std::string save_state() const;
    void restore_state(const std::string& s);

private:
    std::mt19937_64 engine_;
    uint64_t fork_key_ = 0;  // tracks the seed used, for fork derivation
    friend Rng make_seeded_rng(uint64_t);
};

Rng make_seeded_rng(uint64_t seed);

}  // namespace ldtalk
