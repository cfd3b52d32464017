#ifndef SIMULE_RNG_HPP
#define SIMULE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace simule {

// 64-bit seed wrapper; any value is legal.
struct Seed {
    std::uint64_t value = 0;
};

namespace rng_detail {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace rng_detail

// Derives an independent stream seed from (seed, stream index). Used to give
// each task its own stream so tasks can be sampled in any order.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    rng_detail::SplitMix64 sm{seed ^ ((stream + 1) * 0x9E3779B97F4A7C15ULL)};
    sm.next();
    return sm.next();
}

// xoshiro256++ generator, state filled from SplitMix64. Fully deterministic
// given (seed, stream); no global state.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) {
        rng_detail::SplitMix64 sm{derive_stream(seed, stream)};
        for (auto& s : state_) s = sm.next();
    }
    explicit Rng(Seed seed, std::uint64_t stream = 0) : Rng(seed.value, stream) {}

    std::uint64_t next_u64() {
        const std::uint64_t result = rng_detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rng_detail::rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1) with 53 bits of resolution.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double prob) { return uniform01() < prob; }

    // Standard normal via the Marsaglia polar method (avoids trig calls; the
    // second value of each pair is cached).
    double normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        cached_ = v * f;
        has_cached_ = true;
        return u * f;
    }

private:
    std::uint64_t state_[4];
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace simule

#endif
