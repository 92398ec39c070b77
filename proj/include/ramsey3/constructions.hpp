#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ramsey3/core.hpp"

namespace ramsey3 {

/// n-coloring of K³_{n+5} with every class P-free: for i < n-1, color i is
/// the star at i restricted to vertices >= i; the last color is the complete
/// hypergraph on the final six vertices. Throws Falsification if a class
/// fails the detector check.
Coloring lower_bound_coloring(std::size_t n);

/// All binom(N-1, 2) triples through `center`.
Hypergraph star_hypergraph(std::size_t order, VertexId center);

/// Known exact value of R(P;n) with where it comes from, for n <= 10.
struct KnownValue {
    std::uint64_t value;
    std::string_view source;
};

std::optional<KnownValue> known_ramsey_value(std::uint64_t n);

struct BoundsRow {
    std::uint64_t n = 0;
    std::uint64_t lower = 0;                  // n + 6
    std::optional<std::uint64_t> upper_old;   // 3n + 1, n >= 7
    std::uint64_t upper_new = 0;              // threshold(n)
    std::optional<std::uint64_t> exact;
    std::uint64_t best_upper = 0;
};

std::vector<BoundsRow> bounds_table(std::uint64_t n_max);

}  // namespace ramsey3
