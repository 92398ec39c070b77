#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey3/core.hpp"
#include "ramsey3/lemma.hpp"
#include "ramsey3/patterns.hpp"

namespace ramsey3 {

/// Smallest N with N >= 2n + sqrt(18n+1) + 2, i.e. 2n + 2 + ceil(sqrt(18n+1)),
/// computed without floating point.
std::uint64_t threshold(std::uint64_t n);

/// (m-1)(m-2) > 18n, the integer form of (m-1)/(2n) - 9/(m-2) > 0.
bool bracket_positive(std::uint64_t n, std::uint64_t m);

/// Exact fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

int compare(const Rational& x, const Rational& y) noexcept;

/// (binom(N,2) - 3r/(m-2)) / n with N = 2n + m and r = 3Nn. Needs m > 2.
Rational pigeonhole_bound(std::uint64_t n, std::uint64_t m);

/// N + N[(m-1)/(2n) - 9/(m-2)], the expanded form of pigeonhole_bound.
Rational pigeonhole_expanded(std::uint64_t n, std::uint64_t m);

struct ColoredPath {
    Color color = 0;
    Embedding witness;
};

/// First color class (by index) containing P, with its lex-first witness.
std::optional<ColoredPath> find_mono_path(const Coloring& col);

/// Simple graph given by its edge list; the vertex set is the set of
/// endpoints, so there are no isolated vertices.
class PairGraph {
  public:
    PairGraph() = default;
    explicit PairGraph(std::vector<std::pair<VertexId, VertexId>> edges);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }

  private:
    std::vector<VertexId> vertices_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

using GraphPath = std::array<VertexId, 4>;

/// Lexicographically first (v1, v2, v3, v4) with edges v1v2, v2v3, v3v4.
std::optional<GraphPath> find_path3_in_graph(const PairGraph& g);

class PairDegreeTooLow : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

class MissingFEdge : public Falsification {
  public:
    using Falsification::Falsification;
};

/// Outcome of the closing argument on a path v1v2v3v4 whose three pairs each
/// lie in at least three edges. Case 1 is P; cases 2-4 are the three C
/// configurations (w = u, w = v4, u = v1); case 5 is F.
struct CaseWitness {
    int case_number = 0;
    Embedding embedding;
    GraphPath path{};
    VertexId v5 = 0;
    VertexId w = 0;
    VertexId u = 0;
};

/// Tries every admissible (v5, w, u) and returns the first witness in case
/// order, then (v5, w, u). Throws PairDegreeTooLow if a path pair lies in
/// fewer than three edges of ht and MissingFEdge if the forced F is
/// incomplete.
CaseWitness case_analysis(const Hypergraph& ht, const GraphPath& path);

enum class TerminalKind { MonoPFound, Inconclusive, FalsificationWitness };

std::string to_string(TerminalKind kind);

struct Terminal {
    TerminalKind kind = TerminalKind::Inconclusive;
    int stage = 0;
    std::string detail;
};

/// Every quantity recorded while running the counting argument on one
/// coloring.
struct PipelineTrace {
    std::size_t order = 0;
    std::size_t colors = 0;
    std::int64_t m = 0;  // order - 2 * colors

    // stage 0
    std::size_t classes_scanned = 0;
    std::optional<ColoredPath> mono_path;

    // stage 1
    std::vector<DeletionCertificate> certificates;  // empty when blanks are supplied
    std::vector<std::vector<Triple>> blanks;
    std::size_t blank_total = 0;
    std::uint64_t r_bound = 0;  // 3 * order * colors

    // stage 2, pairs indexed in lexicographic (v < w) order
    std::vector<std::optional<Color>> pair_colors;
    std::vector<std::size_t> colored_counts;
    std::size_t uncolored = 0;

    // stage 3
    std::optional<std::size_t> min_blank_on_uncolored;

    // stage 4
    Color chosen = 0;
    std::size_t chosen_count = 0;
    Rational average_bound;                  // (binom(N,2) - U) / n
    std::optional<Rational> closed_bound;    // pigeonhole_bound(n, m), m > 2
    std::optional<bool> bracket_positive;    // m > 2

    // stage 5
    std::size_t gt_vertices = 0;
    std::size_t gt_edges = 0;

    // stages 6-7
    std::optional<GraphPath> path;
    std::optional<CaseWitness> case_witness;

    Terminal terminal;
};

/// Runs the whole argument: direct P scan, purification of every class,
/// pair coloring, choice of t, G_t, path search and case analysis.
/// Throws InvalidColoring on malformed input; every other outcome is a
/// terminal status in the trace.
PipelineTrace audit(const Coloring& col);

/// Stages 2-7 only, with blank sets supplied by the caller instead of
/// computed by purify(). Lets the counting and case-analysis stages run on
/// classes that are not P-free.
PipelineTrace audit_with_blanks(const Coloring& col, std::vector<std::vector<Triple>> blanks);

}  // namespace ramsey3
