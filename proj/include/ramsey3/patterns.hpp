#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "ramsey3/core.hpp"

namespace ramsey3 {

/// The three forbidden shapes: the loose path P (7 vertices, 3 edges), the
/// loose cycle C (6 vertices, 3 edges) and the gadget F (a 4-clique v1..v4
/// plus v1v2v5, v2v3v5, v3v4v5).
enum class PatternKind { LoosePath3, LooseCycle3, Gadget };

std::string_view to_string(PatternKind kind) noexcept;
std::size_t pattern_order(PatternKind kind) noexcept;
std::size_t pattern_size(PatternKind kind) noexcept;

/// The pattern itself on vertices 0..pattern_order-1.
Hypergraph pattern_hypergraph(PatternKind kind);

/// The seven edges of F for roles v1..v5, in the order
/// v1v2v3, v1v2v4, v1v3v4, v2v3v4, v1v2v5, v2v3v5, v3v4v5.
std::array<Triple, 7> gadget_edges(const std::array<VertexId, 5>& roles);

/// A witnessed copy of a pattern inside a host.
///
/// For P and C, `edges` lists e1, e2, e3. P keeps e1 < e3 and
/// `roles` = (e1∩e2, e2∩e3). C keeps e1 < e2 < e3 and
/// `roles` = (e1∩e2, e2∩e3, e3∩e1). For F, `roles` = v1..v5 and `edges`
/// follow gadget_edges().
struct Embedding {
    PatternKind kind = PatternKind::LoosePath3;
    std::vector<Triple> edges;
    std::vector<VertexId> roles;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Checks that every edge is in `host` and that the edges realise the
/// pattern's exact intersection structure with the recorded roles.
bool is_valid_embedding(const Embedding& emb, const Hypergraph& host);

/// Lexicographically first P by (e1, e2, e3) with e1 < e3.
std::optional<Embedding> find_loose_path3(const Hypergraph& h);
std::optional<Embedding> find_loose_path3(const HypergraphIndex& idx);

/// Lexicographically first C by its sorted edge list.
std::optional<Embedding> find_loose_cycle3(const Hypergraph& h);
std::optional<Embedding> find_loose_cycle3(const HypergraphIndex& idx);

/// Lexicographically first F by (v1..v5), taking each assignment modulo the
/// reversal (v1 v2 v3 v4) -> (v4 v3 v2 v1).
std::optional<Embedding> find_gadget_f(const Hypergraph& h);
std::optional<Embedding> find_gadget_f(const HypergraphIndex& idx);

std::optional<Embedding> find_pattern(PatternKind kind, const Hypergraph& h);

/// Every copy of P exactly once, sorted by (e1, e2, e3).
std::vector<Embedding> enumerate_loose_path3(const Hypergraph& h);

/// Every F role assignment modulo reversal, sorted by roles.
std::vector<Embedding> enumerate_gadget_f(const Hypergraph& h);

/// Brute force over injective vertex maps from the pattern into the host.
/// Shares no code with the detectors above.
bool oracle_contains(PatternKind kind, const Hypergraph& h);

/// Number of distinct edge sets that are images of the pattern in the host.
std::size_t oracle_count_copies(PatternKind kind, const Hypergraph& h);

/// Grows a P-free hypergraph one edge at a time, answering whether a
/// candidate edge would complete a loose path.
class LoosePathGuard {
  public:
    explicit LoosePathGuard(std::size_t order) : by_vertex_(order) {}

    /// True if adding e to the current edges creates a copy of P through e.
    bool closes_path(const Triple& e) const;
    void add(const Triple& e);

  private:
    bool has_end_at(const Triple& middle, VertexId connector, const Triple& avoid) const;

    std::vector<std::vector<Triple>> by_vertex_;
};

}  // namespace ramsey3
