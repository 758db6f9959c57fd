#pragma once

#include <cstdint>
#include <string_view>

namespace pgroup {

/// Counter-based generator: the i-th draw is splitmix64(seed + i * golden).
/// Draws depend only on (seed, position), so any sampling run is replayable
/// from the seed recorded in its report.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return counter_; }

    std::uint64_t next() { return mix(seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % bound;
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Derives an independent stream seed from a parent seed and a label.
    static std::uint64_t derive(std::uint64_t parent, std::string_view label) {
        std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
        for (unsigned char ch : label) {
            h ^= ch;
            h *= 0x100000001B3ULL;
        }
        return mix(parent ^ mix(h));
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

}  // namespace pgroup
