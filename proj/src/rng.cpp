#include "fedmim/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fedmim {

namespace {

uint64_t splitmix64(uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

uint64_t mix64(uint64_t a, uint64_t b) {
    uint64_t x = a ^ (b * 0xFF51AFD7ED558CCDull + 0x9E3779B97F4A7C15ull);
    splitmix64(x);
    splitmix64(x);
    return x;
}

}  // namespace

Rng::Rng(uint64_t seed) : seed_(seed), state_(seed) {
    // Warm up so nearby seeds diverge immediately.
    splitmix64(state_);
}

uint64_t Rng::next_u64() { return splitmix64(state_); }

uint64_t Rng::next_below(uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::next_below: n must be > 0");
    // Rejection sampling keeps the draw unbiased and deterministic.
    uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
    uint64_t v = next_u64();
    while (v >= limit) v = next_u64();
    return v % n;
}

float Rng::next_float() {
    return static_cast<float>(next_u64() >> 40) * (1.0f / 16777216.0f);
}

float Rng::next_gaussian() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    // Box-Muller in double, rounded to float at the end.
    double u1 = 0.0;
    do {
        u1 = static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    } while (u1 <= 0.0);
    double u2 = static_cast<double>(next_u64() >> 11) * (1.0 / 9007199254740992.0);
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 6.283185307179586476925286766559 * u2;
    cached_ = static_cast<float>(r * std::sin(t));
    has_cached_ = true;
    return static_cast<float>(r * std::cos(t));
}

Rng Rng::derive(uint64_t stream) const { return Rng(mix64(seed_, stream)); }

std::vector<int> Rng::sample_without_replacement(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("sample_without_replacement: k out of range");
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(next_below(static_cast<uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

void Rng::shuffle(std::span<int> values) {
    for (size_t i = values.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(next_below(i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace fedmim
