#pragma once

#include <cstdint>
#include <random>

namespace dnb {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seedable deterministic stream. Draw helpers avoid std:: distributions so
// that identical seeds give identical sequences on every platform.
//
// derive() mixes tags into the *seed* (not the stream state), so child
// streams depend only on (seed, tags). Concurrent workers that each derive
// their own stream by ordinal produce schedule-independent results.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    // uniform in [0, n); n >= 1
    std::size_t uniform_index(std::size_t n) {
        std::uint64_t threshold = (0ULL - n) % n;  // 2^64 mod n
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return static_cast<std::size_t>(x % n);
        }
    }

    // uniform in [lo, hi], inclusive
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform_index(static_cast<std::size_t>(hi - lo) + 1));
    }

    // uniform in [0, 1)
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_real() < p; }

    RngStream derive(std::uint64_t a, std::uint64_t b = 0) const {
        std::uint64_t h = splitmix64(seed_ ^ splitmix64(a));
        return RngStream(splitmix64(h ^ splitmix64(b)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

}  // namespace dnb
