#pragma once

#include <cstdint>

namespace zolab {

/// SplitMix64 (Steele/Lea/Flood mixing constants). The library's one PRNG:
/// fixed algorithm, platform-independent output, cheap O(1) splitting.
///
/// Stream derivation used everywhere: the i-th derived seed of a master
/// seed s is mix64(s + (i+1) * 0x9e3779b97f4a7c15), i.e. the (i+1)-th raw
/// SplitMix64 output of state s. Uniform doubles are (x >> 11) * 2^-53.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound) by rejection (bound > 0).
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

    static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
        return mix64(master + (index + 1) * 0x9e3779b97f4a7c15ULL);
    }

private:
    std::uint64_t state_;
};

} // namespace zolab
