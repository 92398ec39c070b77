#include "ramsey3/core.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <string>

namespace ramsey3 {

namespace {

class UnionFind {
  public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return;
        if (rank_[x] < rank_[y]) std::swap(x, y);
        parent_[y] = x;
        if (rank_[x] == rank_[y]) ++rank_[x];
    }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

}  // namespace

Triple make_triple(VertexId x, VertexId y, VertexId z) {
    if (x == y || y == z || x == z)
        throw DuplicateVertex("triple has a repeated vertex: " + std::to_string(x) + " " +
                              std::to_string(y) + " " + std::to_string(z));
    std::array<VertexId, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

std::optional<VertexId> single_common(const Triple& e, const Triple& f) noexcept {
    std::optional<VertexId> found;
    for (VertexId v : e.vertices()) {
        if (!f.contains(v)) continue;
        if (found) return std::nullopt;
        found = v;
    }
    return found;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t lex_rank(const Triple& t, std::size_t order) noexcept {
    const std::uint64_t n = order;
    // triples with a smaller first vertex, then same first and smaller second
    return static_cast<std::size_t>(binomial(n, 3) - binomial(n - t.a, 3) +
                                    binomial(n - t.a - 1, 2) - binomial(n - t.b, 2) +
                                    (t.c - t.b - 1));
}

std::vector<Triple> all_triples(std::size_t order) {
    std::vector<Triple> out;
    out.reserve(binomial(order, 3));
    for (VertexId a = 0; a < order; ++a)
        for (VertexId b = a + 1; b < order; ++b)
            for (VertexId c = b + 1; c < order; ++c) out.push_back({a, b, c});
    return out;
}

Hypergraph::Hypergraph(std::size_t order, std::vector<Triple> edges)
    : order_(order), edges_(std::move(edges)) {
    for (const Triple& e : edges_) {
        if (!(e.a < e.b && e.b < e.c)) throw InvalidInput("edge is not a canonical triple");
        if (e.c >= order_)
            throw InvalidInput("edge vertex " + std::to_string(e.c) + " out of range for order " +
                               std::to_string(order_));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidInput("duplicate edge");
}

bool Hypergraph::contains(const Triple& t) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), t);
}

std::size_t Hypergraph::degree(VertexId v) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(edges_.begin(), edges_.end(), [v](const Triple& e) { return e.contains(v); }));
}

Hypergraph Hypergraph::without(std::span<const Triple> removed) const {
    std::vector<Triple> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<Triple> kept;
    kept.reserve(edges_.size());
    std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    Hypergraph h;
    h.order_ = order_;
    h.edges_ = std::move(kept);
    return h;
}

Hypergraph Hypergraph::relabeled(std::span<const VertexId> perm) const {
    if (perm.size() != order_) throw InvalidInput("permutation size does not match order");
    std::vector<Triple> mapped;
    mapped.reserve(edges_.size());
    for (const Triple& e : edges_) mapped.push_back(make_triple(perm[e.a], perm[e.b], perm[e.c]));
    return Hypergraph(order_, std::move(mapped));
}

Hypergraph complete_hypergraph(std::size_t order) {
    if (order < 3) throw OrderTooSmall("complete hypergraph needs at least 3 vertices");
    return Hypergraph(order, all_triples(order));
}

Hypergraph hypergraph_from_mask(std::size_t order, std::uint64_t mask) {
    if (binomial(order, 3) > 64) throw InvalidInput("mask encoding supports at most 64 triples");
    std::vector<Triple> edges;
    std::size_t i = 0;
    for (VertexId a = 0; a < order; ++a)
        for (VertexId b = a + 1; b < order; ++b)
            for (VertexId c = b + 1; c < order; ++c, ++i)
                if ((mask >> i) & 1U) edges.push_back({a, b, c});
    return Hypergraph(order, std::move(edges));
}

std::size_t pair_degree(const Hypergraph& h, VertexId v, VertexId w) {
    if (v == w) throw SameVertex("pair_degree needs two distinct vertices");
    if (v >= h.order() || w >= h.order()) throw InvalidInput("pair vertex out of range");
    return static_cast<std::size_t>(std::count_if(h.edges().begin(), h.edges().end(),
                                                  [&](const Triple& e) {
                                                      return e.contains(v) && e.contains(w);
                                                  }));
}

ComponentPartition components(const Hypergraph& h) {
    const std::size_t n = h.order();
    UnionFind uf(n);
    std::vector<bool> touched(n, false);
    for (const Triple& e : h.edges()) {
        uf.unite(e.a, e.b);
        uf.unite(e.a, e.c);
        touched[e.a] = touched[e.b] = touched[e.c] = true;
    }

    ComponentPartition out;
    std::vector<std::size_t> slot(n, SIZE_MAX);
    for (VertexId v = 0; v < n; ++v) {
        if (!touched[v]) {
            out.isolated.push_back(v);
            continue;
        }
        std::size_t root = uf.find(v);
        if (slot[root] == SIZE_MAX) {
            slot[root] = out.components.size();
            out.components.emplace_back();
        }
        out.components[slot[root]].vertices.push_back(v);
    }
    for (const Triple& e : h.edges()) out.components[slot[uf.find(e.a)]].edges.push_back(e);
    return out;
}

HypergraphIndex::HypergraphIndex(const Hypergraph& h)
    : graph_(&h), order_(h.order()), present_(binomial(h.order(), 3), 0) {
    const auto edges = h.edges();
    vertex_offsets_.assign(order_ + 1, 0);
    pair_offsets_.assign(order_ * order_ + 1, 0);
    for (const Triple& e : edges) {
        present_[lex_rank(e, order_)] = 1;
        for (VertexId v : e.vertices()) ++vertex_offsets_[v + 1];
        ++pair_offsets_[pair_slot(e.a, e.b) + 1];
        ++pair_offsets_[pair_slot(e.b, e.a) + 1];
        ++pair_offsets_[pair_slot(e.a, e.c) + 1];
        ++pair_offsets_[pair_slot(e.c, e.a) + 1];
        ++pair_offsets_[pair_slot(e.b, e.c) + 1];
        ++pair_offsets_[pair_slot(e.c, e.b) + 1];
    }
    std::partial_sum(vertex_offsets_.begin(), vertex_offsets_.end(), vertex_offsets_.begin());
    std::partial_sum(pair_offsets_.begin(), pair_offsets_.end(), pair_offsets_.begin());
    vertex_data_.resize(vertex_offsets_.back());
    pair_data_.resize(pair_offsets_.back());

    // edges are visited in lex order, which leaves every list ascending
    std::vector<std::uint32_t> vfill(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
    std::vector<std::uint32_t> pfill(pair_offsets_.begin(), pair_offsets_.end() - 1);
    for (std::uint32_t i = 0; i < edges.size(); ++i) {
        const Triple& e = edges[i];
        for (VertexId v : e.vertices()) vertex_data_[vfill[v]++] = i;
        pair_data_[pfill[pair_slot(e.a, e.b)]++] = e.c;
        pair_data_[pfill[pair_slot(e.b, e.a)]++] = e.c;
        pair_data_[pfill[pair_slot(e.a, e.c)]++] = e.b;
        pair_data_[pfill[pair_slot(e.c, e.a)]++] = e.b;
        pair_data_[pfill[pair_slot(e.b, e.c)]++] = e.a;
        pair_data_[pfill[pair_slot(e.c, e.b)]++] = e.a;
    }
}

bool HypergraphIndex::has(VertexId x, VertexId y, VertexId z) const {
    if (x == y || y == z || x == z) return false;
    return has(make_triple(x, y, z));
}

Coloring::Coloring(std::size_t order, std::size_t colors, std::vector<Color> assignment)
    : order_(order), colors_(colors), assignment_(std::move(assignment)) {
    if (order_ < 3) throw InvalidColoring("coloring needs at least 3 vertices");
    if (colors_ < 1) throw InvalidColoring("coloring needs at least one color");
    if (assignment_.size() != binomial(order_, 3))
        throw InvalidColoring("coloring does not cover every triple exactly once");
    for (Color s : assignment_)
        if (s >= colors_) throw InvalidColoring("color " + std::to_string(s) + " out of range");
}

Hypergraph Coloring::color_class(Color s) const {
    std::vector<Triple> edges;
    std::size_t i = 0;
    for (VertexId a = 0; a < order_; ++a)
        for (VertexId b = a + 1; b < order_; ++b)
            for (VertexId c = b + 1; c < order_; ++c, ++i)
                if (assignment_[i] == s) edges.push_back({a, b, c});
    return Hypergraph(order_, std::move(edges));
}

}  // namespace ramsey3
