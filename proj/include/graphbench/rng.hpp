// Deterministic RNG streams. Every sampler owns a stream derived from
// (suite seed, stream label), so parallel generation cannot reorder draws and
// suite bytes are reproducible across standard libraries (std::*_distribution
// is implementation-defined, so bounded draws are implemented here).
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace graphbench {

// SplitMix64 step; also used to hash text labels into seed material.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_label(const std::string& label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;  // FNV-1a
    }
    return h;
}

class RngStream {
public:
    RngStream() : RngStream(0) {}

    explicit RngStream(std::uint64_t seed) {
        std::uint64_t s = seed;
        engine_.seed(splitmix64(s));
    }

    // Stream for one unit of work, e.g. (suite seed, "L2-017:ref1").
    RngStream(std::uint64_t seed, const std::string& label) {
        std::uint64_t s = seed ^ hash_label(label);
        engine_.seed(splitmix64(s));
    }

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased draw in [0, n) via Lemire's multiply-shift rejection method.
    std::uint64_t uniform(std::uint64_t n) {
        if (n == 0) return 0;
        while (true) {
            std::uint64_t x = next_u64();
            __uint128_t m = static_cast<__uint128_t>(x) * n;
            auto lo = static_cast<std::uint64_t>(m);
            if (lo < n) {
                std::uint64_t threshold = (0 - n) % n;
                if (lo < threshold) continue;
            }
            return static_cast<std::uint64_t>(m >> 64);
        }
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double uniform_real() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform_real(double lo, double hi) { return lo + (hi - lo) * uniform_real(); }

    bool bernoulli(double p) { return uniform_real() < p; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = uniform(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[uniform(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace graphbench
