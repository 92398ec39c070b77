#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ramsey3/error.hpp"

namespace ramsey3 {

using VertexId = std::uint32_t;
using Color = std::uint32_t;

/// A hyperedge: three distinct vertices stored in ascending order.
struct Triple {
    VertexId a = 0;
    VertexId b = 0;
    VertexId c = 0;

    constexpr bool contains(VertexId v) const noexcept { return v == a || v == b || v == c; }
    constexpr std::array<VertexId, 3> vertices() const noexcept { return {a, b, c}; }

    friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

/// Sorts x, y, z into a Triple. Throws DuplicateVertex on repeated vertices.
Triple make_triple(VertexId x, VertexId y, VertexId z);

/// Number of vertices two triples have in common.
constexpr int shared_count(const Triple& e, const Triple& f) noexcept {
    int k = 0;
    for (VertexId v : e.vertices()) k += f.contains(v) ? 1 : 0;
    return k;
}

/// The unique common vertex when |e ∩ f| = 1.
std::optional<VertexId> single_common(const Triple& e, const Triple& f) noexcept;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Position of t in the lexicographic enumeration of all triples on
/// `order` vertices.
std::size_t lex_rank(const Triple& t, std::size_t order) noexcept;

/// All binom(order, 3) triples in lexicographic order.
std::vector<Triple> all_triples(std::size_t order);

/// Immutable 3-uniform hypergraph on vertices 0..order-1. Edges are kept
/// sorted lexicographically and free of duplicates.
class Hypergraph {
  public:
    Hypergraph() = default;

    /// Throws InvalidInput on out-of-range vertices or duplicate edges.
    Hypergraph(std::size_t order, std::vector<Triple> edges);

    std::size_t order() const noexcept { return order_; }
    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    std::span<const Triple> edges() const noexcept { return edges_; }

    bool contains(const Triple& t) const noexcept;

    /// Degree of a single vertex.
    std::size_t degree(VertexId v) const noexcept;

    /// Edges not listed in `removed`.
    Hypergraph without(std::span<const Triple> removed) const;

    /// Relabels vertex v as perm[v]; perm must be a permutation of 0..order-1.
    Hypergraph relabeled(std::span<const VertexId> perm) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

  private:
    std::size_t order_ = 0;
    std::vector<Triple> edges_;
};

Hypergraph complete_hypergraph(std::size_t order);

/// Hypergraph whose edges are the triples at the set bit positions of
/// `mask`, in lexicographic triple order. Needs binom(order, 3) <= 64.
Hypergraph hypergraph_from_mask(std::size_t order, std::uint64_t mask);

/// Number of edges containing both v and w.
std::size_t pair_degree(const Hypergraph& h, VertexId v, VertexId w);

struct Component {
    std::vector<VertexId> vertices;  // ascending
    std::vector<Triple> edges;       // lexicographic
};

struct ComponentPartition {
    std::vector<Component> components;  // ordered by smallest vertex
    std::vector<VertexId> isolated;
};

ComponentPartition components(const Hypergraph& h);

/// Adjacency lookup tables for a hypergraph: a presence bitmap indexed by
/// lex_rank, per-vertex incident edges and per-pair third vertices. Lists
/// are in ascending order. The hypergraph must outlive the index.
class HypergraphIndex {
  public:
    explicit HypergraphIndex(const Hypergraph& h);

    const Hypergraph& graph() const noexcept { return *graph_; }
    std::size_t order() const noexcept { return order_; }

    bool has(const Triple& t) const noexcept { return present_[lex_rank(t, order_)] != 0; }
    bool has(VertexId x, VertexId y, VertexId z) const;

    /// Indices into graph().edges() of the edges through v.
    std::span<const std::uint32_t> incident(VertexId v) const noexcept {
        return {vertex_data_.data() + vertex_offsets_[v],
                vertex_data_.data() + vertex_offsets_[v + 1]};
    }

    /// Vertices z such that {v, w, z} is an edge.
    std::span<const VertexId> thirds(VertexId v, VertexId w) const noexcept {
        const std::size_t p = pair_slot(v, w);
        return {pair_data_.data() + pair_offsets_[p], pair_data_.data() + pair_offsets_[p + 1]};
    }

    const Triple& edge(std::uint32_t i) const noexcept { return graph_->edges()[i]; }

  private:
    std::size_t pair_slot(VertexId v, VertexId w) const noexcept {
        return static_cast<std::size_t>(v) * order_ + w;
    }

    const Hypergraph* graph_;
    std::size_t order_;
    std::vector<std::uint8_t> present_;
    std::vector<std::uint32_t> vertex_offsets_;
    std::vector<std::uint32_t> vertex_data_;
    std::vector<std::uint32_t> pair_offsets_;
    std::vector<VertexId> pair_data_;
};

/// Total map from the triples of K³_N to colors 0..colors-1, stored in
/// lexicographic triple order.
class Coloring {
  public:
    Coloring() = default;

    /// Throws InvalidColoring if the assignment is not total or a color is
    /// out of range.
    Coloring(std::size_t order, std::size_t colors, std::vector<Color> assignment);

    std::size_t order() const noexcept { return order_; }
    std::size_t colors() const noexcept { return colors_; }
    std::span<const Color> assignment() const noexcept { return assignment_; }

    Color color_of(const Triple& t) const noexcept { return assignment_[lex_rank(t, order_)]; }

    /// The hypergraph of all triples with color s, on all `order` vertices.
    Hypergraph color_class(Color s) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

  private:
    std::size_t order_ = 0;
    std::size_t colors_ = 0;
    std::vector<Color> assignment_;
};

}  // namespace ramsey3
