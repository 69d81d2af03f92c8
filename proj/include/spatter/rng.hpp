#pragma once

#include <cstdint>
#include <cmath>
#include <span>
#include <vector>

namespace spatter {

/// Deterministic 64-bit RNG (xoshiro256** seeded via splitmix64).
///
/// std::shuffle and std::*_distribution are implementation-defined, so every
/// random draw in the library goes through this class to keep artifacts
/// reproducible across standard libraries and thread counts.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : state_) s = splitmix64(x);
    }

    /// Derive an independent child stream, e.g. one per tree / frame / grid point.
    Rng child(std::uint64_t tag) const {
        std::uint64_t mix = state_[0] ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
        return Rng(mix ^ (state_[2] >> 7));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform in [0, 1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Unbiased integer in [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t threshold = (0ULL - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    int index(std::size_t n) { return static_cast<int>(below(n)); }

    /// Standard normal via Box-Muller (no cached spare, so streams stay simple).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    double normal(double mean, double sd) { return mean + sd * normal(); }

    /// In-place Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    /// k distinct indices out of n (partial Fisher-Yates), order randomized.
    std::vector<int> sample_without_replacement(std::size_t n, std::size_t k) {
        std::vector<int> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
        if (k > n) k = n;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + below(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

    /// Poisson draw by inversion (small rates) or normal approximation fallback.
    int poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda > 60.0) {
            const double v = std::floor(normal(lambda, std::sqrt(lambda)) + 0.5);
            return v < 0 ? 0 : static_cast<int>(v);
        }
        const double limit = std::exp(-lambda);
        double prod = 1.0;
        int k = -1;
        do {
            ++k;
            prod *= uniform01();
        } while (prod > limit);
        return k;
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace spatter
