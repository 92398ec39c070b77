#include "ramsey3/gen.hpp"

#include <utility>

#include "ramsey3/patterns.hpp"

namespace ramsey3 {

Coloring random_coloring(std::size_t order, std::size_t colors, std::uint64_t seed) {
    if (order < 3) throw OrderTooSmall("random coloring needs at least 3 vertices");
    if (colors < 1) throw InvalidInput("random coloring needs at least one color");
    SplitMix64 rng(seed);
    std::vector<Color> assignment(binomial(order, 3));
    for (Color& s : assignment) s = static_cast<Color>(rng.uniform_below(colors));
    return Coloring(order, colors, std::move(assignment));
}

Hypergraph random_pfree(std::size_t order, std::uint64_t seed) {
    if (order < 5) throw OrderTooSmall("random P-free hypergraph needs at least 5 vertices");
    SplitMix64 rng(seed);
    auto triples = all_triples(order);
    for (std::size_t i = triples.size() - 1; i > 0; --i)
        std::swap(triples[i], triples[rng.uniform_below(i + 1)]);

    LoosePathGuard guard(order);
    std::vector<Triple> kept;
    for (const Triple& t : triples) {
        if (guard.closes_path(t)) continue;
        guard.add(t);
        kept.push_back(t);
    }
    return Hypergraph(order, std::move(kept));
}

}  // namespace ramsey3
