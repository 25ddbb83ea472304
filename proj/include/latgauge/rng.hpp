#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace latgauge {

// All randomness in the project flows through the two generators below so
// that every run is reproducible from (master seed, chain index) alone.
// std::random distributions are implementation-defined and would break the
// bit-exact rerun contract, hence the explicit algorithms.

/// SplitMix64 step: advances `state` and returns the next output word.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Per-chain seed derivation: one SplitMix64 output of
/// master_seed XOR (chain_index + 1) * 0x9e3779b97f4a7c15.
inline std::uint64_t derive_chain_seed(std::uint64_t master_seed,
                                       std::uint64_t chain_index) {
    std::uint64_t s = master_seed ^ (0x9e3779b97f4a7c15ull * (chain_index + 1));
    return splitmix64_next(s);
}

/// xoshiro256++ (Blackman/Vigna). 4-word state, serialized verbatim in
/// checkpoints. Seeded by filling the state with SplitMix64 outputs.
class Rng {
  public:
    using State = std::array<std::uint64_t, 4>;

    Rng() : Rng(0) {}

    explicit Rng(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& w : state_) {
            w = splitmix64_next(s);
        }
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

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1]; safe as a log() argument.
    double uniform_pos() { return 1.0 - uniform(); }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) {
        // Multiply-shift; the modulo bias is < 2^-64 * n, irrelevant here.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Standard normal via Box-Muller (trig form). Consumes two uniforms per
    /// call and keeps no cached spare, so the state alone determines the
    /// stream.
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    const State& state() const { return state_; }
    void set_state(const State& s) { state_ = s; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    State state_;
};

} // namespace latgauge
