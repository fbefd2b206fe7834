#pragma once

#include <cstdint>
#include <cmath>

// Self-contained PRNG so that identical seeds give bit-identical streams
// on every platform/compiler. std::<distribution> algorithms are
// implementation-defined, which would break byte-exact reproducibility.

namespace nvfiber {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derive an independent child seed from (root, index). Used to split one
/// pipeline seed into per-power simulation seeds deterministically.
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t s = root ^ (0x2545f4914f6cdd1dULL * (index + 1));
    return splitmix64(s);
}

/// xoshiro256** (Blackman & Vigna), seeded via splitmix64.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        for (auto& w : s_) w = splitmix64(seed);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 significant bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0,1], safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    /// Exponential waiting time with the given rate (1/s).
    double exponential(double rate) { return -std::log(uniform_pos()) / rate; }

    /// Standard normal via Box-Muller (polar-free, deterministic two-call form).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586 * u2;
        cached_ = r * std::sin(a);
        have_cached_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace nvfiber
