#pragma once

#include <cstdint>

#include "ramsey3/core.hpp"

namespace ramsey3 {

/// SplitMix64 (Steele, Lea and Flood; constants as in Vigna's reference
/// implementation at https://prng.di.unimi.it/splitmix64.c).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound) by rejection: draws below 2^64 mod bound are
    /// discarded, the rest are reduced mod bound.
    std::uint64_t uniform_below(std::uint64_t bound) noexcept {
        const std::uint64_t reject = (0 - bound) % bound;
        std::uint64_t r = next();
        while (r < reject) r = next();
        return r % bound;
    }

  private:
    std::uint64_t state_;
};

/// Independent uniform color per triple, drawn in lexicographic order.
Coloring random_coloring(std::size_t order, std::size_t colors, std::uint64_t seed);

/// Greedy maximal P-free hypergraph: all triples are Fisher-Yates shuffled
/// (i from last down to 1, j = uniform_below(i + 1)) and each is kept unless
/// it closes a loose path. Dense by construction.
Hypergraph random_pfree(std::size_t order, std::uint64_t seed);

}  // namespace ramsey3
