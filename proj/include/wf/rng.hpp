#pragma once

// Self-contained PRNG (xoshiro256++ seeded via splitmix64) with explicit
// uniform/normal transforms. std::normal_distribution and friends are
// implementation-defined, so nothing from <random> is used on data paths.
// Streams are derived counter-style from (seed, labels...) so a resumed run
// replays the exact same draws without persisting generator state.

#include <cstdint>
#include <vector>

#include "wf/detmath.hpp"

namespace wf {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
    }

    // Independent stream keyed by (seed, labels...). Mixing is order-sensitive.
    template <typename... Labels>
    static Rng derive(std::uint64_t seed, Labels... labels) {
        std::uint64_t acc = seed;
        ((acc = mix(acc, static_cast<std::uint64_t>(labels))), ...);
        return Rng(acc);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    std::uint32_t next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    float uniform_f32() { return static_cast<float>(uniform()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Integer in [0, n), n > 0. Multiply-shift map; bias < 2^-32, fine here.
    std::uint32_t range(std::uint32_t n) {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(next_u32()) * n) >> 32);
    }

    // Standard normal via Box-Muller on deterministic log/sincos.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * dm::log_det(u1));
        double s, c;
        dm::sincos_det(dm::kTwoPi * u2, s, c);
        spare_ = mag * s;
        have_spare_ = true;
        return mag * c;
    }

    float normal_f32() { return static_cast<float>(normal()); }

    bool bernoulli(double p) { return uniform() < p; }

    // Fisher-Yates permutation of 0..n-1.
    std::vector<std::uint32_t> permutation(std::uint32_t n) {
        std::vector<std::uint32_t> perm(n);
        for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
        for (std::uint32_t i = n; i > 1; --i) {
            const std::uint32_t j = range(i);
            const std::uint32_t tmp = perm[i - 1];
            perm[i - 1] = perm[j];
            perm[j] = tmp;
        }
        return perm;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s = a ^ (b + 0x9E3779B97F4A7C15ull + (a << 6) + (a >> 2));
        return splitmix64(s);
    }

    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Stream labels so call sites don't collide by accident.
namespace rngstream {
inline constexpr std::uint64_t kSceneGeometry = 0x5CE17E01;
inline constexpr std::uint64_t kSceneWeather = 0x5CE17E02;
inline constexpr std::uint64_t kParticles = 0x5CE17E03;
inline constexpr std::uint64_t kParamInit = 0x7A3A9001;
inline constexpr std::uint64_t kTrainStep = 0x7A3A9002;
inline constexpr std::uint64_t kShuffle = 0x7A3A9003;
inline constexpr std::uint64_t kSample = 0x7A3A9004;
inline constexpr std::uint64_t kDropout = 0x7A3A9005;
} // namespace rngstream

} // namespace wf
