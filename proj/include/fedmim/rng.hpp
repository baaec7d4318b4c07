// Deterministic pseudo-random source. The whole simulator promises
// bitwise reproducibility from a seed, so nothing here may depend on
// std::random distributions (their output is implementation-defined).
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace fedmim {

/// splitmix64-based generator with cheap derived streams.
///
/// derive(stream) depends only on the construction seed, not on how many
/// numbers were drawn, so (seed, client_id) and (seed, sample_index)
/// yield stable independent streams.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    /// Uniform in [0, n); n > 0.
    uint64_t next_below(uint64_t n);
    /// Uniform float32 in [0, 1) with 24 bits of mantissa.
    float next_float();
    /// Standard normal via Box-Muller (pairs cached).
    float next_gaussian();

    Rng derive(uint64_t stream) const;

    /// k distinct values from {0..n-1}, ascending order; partial Fisher-Yates.
    std::vector<int> sample_without_replacement(int n, int k);
    void shuffle(std::span<int> values);

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t state_;
    bool has_cached_ = false;
    float cached_ = 0.0f;
};

}  // namespace fedmim
