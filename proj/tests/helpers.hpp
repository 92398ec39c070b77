#pragma once

#include <vector>

#include "ramsey3/core.hpp"
#include "ramsey3/gen.hpp"

namespace ramsey3::testing {

inline Hypergraph hg(std::size_t order, std::vector<Triple> edges) {
    return Hypergraph(order, std::move(edges));
}

/// Each triple kept independently with probability percent/100.
inline Hypergraph random_hypergraph(std::size_t order, std::uint64_t percent, SplitMix64& rng) {
    std::vector<Triple> edges;
    for (const Triple& t : all_triples(order))
        if (rng.uniform_below(100) < percent) edges.push_back(t);
    return Hypergraph(order, std::move(edges));
}

inline std::vector<VertexId> random_permutation(std::size_t order, SplitMix64& rng) {
    std::vector<VertexId> perm(order);
    for (VertexId i = 0; i < order; ++i) perm[i] = i;
    for (std::size_t i = order - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_below(i + 1)]);
    return perm;
}

}  // namespace ramsey3::testing
