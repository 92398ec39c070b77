#include "ramsey3/constructions.hpp"

#include <algorithm>
#include <string>

#include "ramsey3/patterns.hpp"
#include "ramsey3/pipeline.hpp"

namespace ramsey3 {

Coloring lower_bound_coloring(std::size_t n) {
    if (n < 1) throw InvalidInput("lower_bound_coloring needs at least one color");
    const std::size_t order = n + 5;
    const auto last = static_cast<Color>(n - 1);
    std::vector<Color> assignment;
    assignment.reserve(binomial(order, 3));
    for (const Triple& t : all_triples(order)) assignment.push_back(std::min<Color>(t.a, last));

    Coloring col(order, n, std::move(assignment));
    for (Color s = 0; s < n; ++s)
        if (find_loose_path3(col.color_class(s)))
            throw Falsification("lower-bound class " + std::to_string(s) + " contains P");
    return col;
}

Hypergraph star_hypergraph(std::size_t order, VertexId center) {
    if (order < 3) throw OrderTooSmall("star needs at least 3 vertices");
    if (center >= order) throw InvalidInput("star center out of range");
    std::vector<Triple> edges;
    for (VertexId x = 0; x < order; ++x)
        for (VertexId y = x + 1; y < order; ++y)
            if (x != center && y != center) edges.push_back(make_triple(center, x, y));
    return Hypergraph(order, std::move(edges));
}

std::optional<KnownValue> known_ramsey_value(std::uint64_t n) {
    if (n == 1) return KnownValue{7, "direct: K3_6 is P-free and K3_7 contains P"};
    if (n == 2) return KnownValue{8, "published, two colors"};
    if (n >= 3 && n <= 10) return KnownValue{n + 6, "published, 3 to 10 colors"};
    return std::nullopt;
}

std::vector<BoundsRow> bounds_table(std::uint64_t n_max) {
    if (n_max < 1) throw InvalidInput("bounds table needs n_max >= 1");
    std::vector<BoundsRow> rows;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        BoundsRow row;
        row.n = n;
        row.lower = n + 6;
        if (n >= 7) row.upper_old = 3 * n + 1;
        row.upper_new = threshold(n);
        if (auto k = known_ramsey_value(n)) row.exact = k->value;
        row.best_upper = row.upper_old ? std::min(*row.upper_old, row.upper_new) : row.upper_new;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ramsey3
