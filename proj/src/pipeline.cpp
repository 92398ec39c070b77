#include "ramsey3/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey3 {

namespace {

__extension__ typedef __int128 i128;

std::uint64_t isqrt_floor(std::uint64_t x) {
    if (x < 2) return x;
    std::uint64_t lo = 1, hi = std::min<std::uint64_t>(x, 4294967295ULL);
    while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

Embedding path_embedding(Triple e1, const Triple& e2, Triple e3) {
    if (e3 < e1) std::swap(e1, e3);
    return {PatternKind::LoosePath3, {e1, e2, e3}, {*single_common(e1, e2), *single_common(e2, e3)}};
}

Embedding cycle_embedding(std::array<Triple, 3> e) {
    std::sort(e.begin(), e.end());
    return {PatternKind::LooseCycle3,
            {e[0], e[1], e[2]},
            {*single_common(e[0], e[1]), *single_common(e[1], e[2]), *single_common(e[2], e[0])}};
}

std::size_t pair_index(VertexId v, VertexId w, std::size_t order) {
    // lexicographic rank of the pair v < w
    return v * order - v * (v + 1) / 2 + (w - v - 1);
}

std::string describe(const Embedding& emb) {
    std::ostringstream out;
    out << to_string(emb.kind);
    for (const Triple& e : emb.edges) out << " {" << e.a << ' ' << e.b << ' ' << e.c << '}';
    return out.str();
}

void run_counting(const Coloring& col, PipelineTrace& trace) {
    const std::size_t N = col.order();
    const std::size_t n = col.colors();

    trace.blank_total = 0;
    for (const auto& b : trace.blanks) trace.blank_total += b.size();
    trace.r_bound = 3ULL * N * n;
    if (trace.blank_total >= trace.r_bound) {
        trace.terminal = {TerminalKind::FalsificationWitness, 1,
                          "blank total " + std::to_string(trace.blank_total) +
                              " is not below r = " + std::to_string(trace.r_bound)};
        return;
    }

    // stage 2: pair coloring over non-blank triples
    std::vector<Hypergraph> kept;
    kept.reserve(n);
    std::vector<Triple> all_blanks;
    for (Color s = 0; s < n; ++s) {
        kept.push_back(col.color_class(s).without(trace.blanks[s]));
        all_blanks.insert(all_blanks.end(), trace.blanks[s].begin(), trace.blanks[s].end());
    }
    std::vector<HypergraphIndex> kept_idx;
    kept_idx.reserve(n);
    for (const Hypergraph& h : kept) kept_idx.emplace_back(h);
    const Hypergraph blank_graph(N, all_blanks);
    const HypergraphIndex blank_idx(blank_graph);

    trace.pair_colors.assign(N * (N - 1) / 2, std::nullopt);
    trace.colored_counts.assign(n, 0);
    trace.uncolored = 0;
    const std::int64_t required = trace.m - 2;
    for (VertexId v = 0; v < N; ++v) {
        for (VertexId w = v + 1; w < N; ++w) {
            std::optional<Color> got;
            for (Color s = 0; s < n && !got; ++s)
                if (kept_idx[s].thirds(v, w).size() >= 3) got = s;
            trace.pair_colors[pair_index(v, w, N)] = got;
            if (got) {
                ++trace.colored_counts[*got];
                continue;
            }
            ++trace.uncolored;
            const std::size_t blank_here = blank_idx.thirds(v, w).size();
            if (!trace.min_blank_on_uncolored || blank_here < *trace.min_blank_on_uncolored)
                trace.min_blank_on_uncolored = blank_here;
            // stage 3, per pair
            if (static_cast<std::int64_t>(blank_here) < required) {
                trace.terminal = {TerminalKind::FalsificationWitness, 3,
                                  "uncolored pair " + std::to_string(v) + " " + std::to_string(w) +
                                      " lies in only " + std::to_string(blank_here) +
                                      " blank triples"};
                return;
            }
        }
    }

    // stage 3, aggregate
    if (trace.m > 2 && static_cast<std::uint64_t>(trace.uncolored) * (trace.m - 2) >
                           3ULL * trace.blank_total) {
        trace.terminal = {TerminalKind::FalsificationWitness, 3,
                          "uncolored count exceeds 3B/(m-2)"};
        return;
    }

    // stage 4
    trace.chosen = 0;
    for (Color s = 1; s < n; ++s)
        if (trace.colored_counts[s] > trace.colored_counts[trace.chosen]) trace.chosen = s;
    trace.chosen_count = trace.colored_counts[trace.chosen];
    const std::int64_t pairs = static_cast<std::int64_t>(N * (N - 1) / 2);
    trace.average_bound = {pairs - static_cast<std::int64_t>(trace.uncolored),
                           static_cast<std::int64_t>(n)};
    if (static_cast<i128>(trace.chosen_count) * trace.average_bound.den < trace.average_bound.num) {
        trace.terminal = {TerminalKind::FalsificationWitness, 4, "pigeonhole violated"};
        return;
    }
    if (trace.m > 2) {
        trace.closed_bound = pigeonhole_bound(n, static_cast<std::uint64_t>(trace.m));
        trace.bracket_positive = bracket_positive(n, static_cast<std::uint64_t>(trace.m));
    }

    // stage 5
    std::vector<std::pair<VertexId, VertexId>> gt_edges;
    for (VertexId v = 0; v < N; ++v)
        for (VertexId w = v + 1; w < N; ++w)
            if (trace.pair_colors[pair_index(v, w, N)] == trace.chosen) gt_edges.emplace_back(v, w);
    const PairGraph gt(std::move(gt_edges));
    trace.gt_vertices = gt.vertices().size();
    trace.gt_edges = gt.edges().size();
    if (trace.gt_edges <= trace.gt_vertices) {
        trace.terminal = {TerminalKind::Inconclusive, 5,
                          "G_t has " + std::to_string(trace.gt_edges) + " edges on " +
                              std::to_string(trace.gt_vertices) + " vertices"};
        return;
    }

    // stage 6
    trace.path = find_path3_in_graph(gt);
    if (!trace.path) {
        trace.terminal = {TerminalKind::FalsificationWitness, 6,
                          "G_t has more edges than vertices but no 3-edge path"};
        return;
    }

    // stage 7
    try {
        trace.case_witness = case_analysis(kept[trace.chosen], *trace.path);
        trace.terminal = {TerminalKind::FalsificationWitness, 7,
                          "non-blank class " + std::to_string(trace.chosen) + " contains " +
                              describe(trace.case_witness->embedding)};
    } catch (const Error& e) {
        trace.terminal = {TerminalKind::FalsificationWitness, 7, e.what()};
    }
}

}  // namespace

std::uint64_t threshold(std::uint64_t n) {
    const std::uint64_t s = 18 * n + 1;
    const std::uint64_t r = isqrt_floor(s);
    return 2 * n + 2 + (r * r == s ? r : r + 1);
}

bool bracket_positive(std::uint64_t n, std::uint64_t m) {
    if (m < 2) return false;
    return static_cast<i128>(m - 1) * (m - 2) > static_cast<i128>(18) * n;
}

int compare(const Rational& x, const Rational& y) noexcept {
    const i128 l = static_cast<i128>(x.num) * y.den;
    const i128 r = static_cast<i128>(y.num) * x.den;
    return l < r ? -1 : (l > r ? 1 : 0);
}

Rational pigeonhole_bound(std::uint64_t n, std::uint64_t m) {
    if (m <= 2 || n == 0) throw InvalidInput("pigeonhole bound needs m > 2 and n >= 1");
    const auto N = static_cast<std::int64_t>(2 * n + m);
    const auto nn = static_cast<std::int64_t>(n);
    const auto mm = static_cast<std::int64_t>(m);
    const std::int64_t r = 3 * N * nn;
    // (N(N-1)/2 - 3r/(m-2)) / n = (N(N-1)(m-2) - 6r) / (2n(m-2))
    return {N * (N - 1) * (mm - 2) - 6 * r, 2 * nn * (mm - 2)};
}

Rational pigeonhole_expanded(std::uint64_t n, std::uint64_t m) {
    if (m <= 2 || n == 0) throw InvalidInput("pigeonhole bound needs m > 2 and n >= 1");
    const auto N = static_cast<std::int64_t>(2 * n + m);
    const auto nn = static_cast<std::int64_t>(n);
    const auto mm = static_cast<std::int64_t>(m);
    // N + N[(m-1)(m-2) - 18n] / (2n(m-2))
    const std::int64_t den = 2 * nn * (mm - 2);
    return {N * den + N * ((mm - 1) * (mm - 2) - 18 * nn), den};
}

std::optional<ColoredPath> find_mono_path(const Coloring& col) {
    for (Color s = 0; s < col.colors(); ++s)
        if (auto p = find_loose_path3(col.color_class(s))) return ColoredPath{s, std::move(*p)};
    return std::nullopt;
}

PairGraph::PairGraph(std::vector<std::pair<VertexId, VertexId>> edges) {
    for (auto& [v, w] : edges) {
        if (v == w) throw SameVertex("graph edge is a loop");
        if (w < v) std::swap(v, w);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (const auto& [v, w] : edges_) {
        vertices_.push_back(v);
        vertices_.push_back(w);
    }
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
}

std::optional<GraphPath> find_path3_in_graph(const PairGraph& g) {
    const auto& verts = g.vertices();
    auto slot = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    std::vector<std::vector<VertexId>> adj(verts.size());
    for (const auto& [v, w] : g.edges()) {
        adj[slot(v)].push_back(w);
        adj[slot(w)].push_back(v);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    for (VertexId v1 : verts)
        for (VertexId v2 : adj[slot(v1)])
            for (VertexId v3 : adj[slot(v2)]) {
                if (v3 == v1) continue;
                for (VertexId v4 : adj[slot(v3)])
                    if (v4 != v1 && v4 != v2) return GraphPath{v1, v2, v3, v4};
            }
    return std::nullopt;
}

CaseWitness case_analysis(const Hypergraph& ht, const GraphPath& path) {
    const auto [v1, v2, v3, v4] = path;
    for (VertexId v : path)
        if (v >= ht.order()) throw InvalidInput("path vertex out of range");
    {
        auto sorted = path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InvalidInput("path vertices must be distinct");
    }

    const HypergraphIndex idx(ht);
    for (auto [x, y] : {std::pair{v1, v2}, std::pair{v2, v3}, std::pair{v3, v4}}) {
        if (idx.thirds(x, y).size() < 3)
            throw PairDegreeTooLow("pair " + std::to_string(x) + " " + std::to_string(y) +
                                   " lies in fewer than 3 edges");
    }

    std::optional<std::array<VertexId, 4>> best;  // (case, v5, w, u)
    for (VertexId v5 : idx.thirds(v2, v3)) {
        if (v5 == v1 || v5 == v4) continue;
        for (VertexId w : idx.thirds(v1, v2)) {
            if (w == v3 || w == v5) continue;
            for (VertexId u : idx.thirds(v3, v4)) {
                if (u == v2 || u == v5) continue;
                VertexId kase = 0;
                if (w != v4 && u != w && u != v1)
                    kase = 1;
                else if (w == u)
                    kase = 2;
                else if (w == v4 && u != v1)
                    kase = 3;
                else if (u == v1 && w != v4)
                    kase = 4;
                else
                    kase = 5;
                std::array<VertexId, 4> key{kase, v5, w, u};
                if (!best || key < *best) best = key;
            }
        }
    }
    // pair degrees >= 3 guarantee at least one admissible triple
    if (!best) throw Falsification("no admissible (v5, w, u) despite pair degrees >= 3");

    const auto [kase, v5, w, u] = *best;
    CaseWitness out;
    out.case_number = static_cast<int>(kase);
    out.path = path;
    out.v5 = v5;
    out.w = w;
    out.u = u;
    const Triple left = make_triple(v1, v2, w);
    const Triple mid = make_triple(v2, v3, v5);
    const Triple right = make_triple(v3, v4, u);
    switch (kase) {
        case 1: out.embedding = path_embedding(left, mid, right); break;
        case 2:
        case 3:
        case 4: out.embedding = cycle_embedding({left, mid, right}); break;
        default: {
            const std::array<VertexId, 5> roles{v1, v2, v3, v4, v5};
            for (const Triple& e : gadget_edges(roles))
                if (!ht.contains(e))
                    throw MissingFEdge("forced F on path lacks edge " + std::to_string(e.a) + " " +
                                       std::to_string(e.b) + " " + std::to_string(e.c));
            auto edges = gadget_edges(roles);
            out.embedding = {PatternKind::Gadget, {edges.begin(), edges.end()}, {roles.begin(), roles.end()}};
        }
    }
    return out;
}

std::string to_string(TerminalKind kind) {
    switch (kind) {
        case TerminalKind::MonoPFound: return "MonoPFound";
        case TerminalKind::Inconclusive: return "Inconclusive";
        case TerminalKind::FalsificationWitness: return "FalsificationWitness";
    }
    return "?";
}

PipelineTrace audit(const Coloring& col) {
    PipelineTrace trace;
    trace.order = col.order();
    trace.colors = col.colors();
    trace.m = static_cast<std::int64_t>(col.order()) - 2 * static_cast<std::int64_t>(col.colors());

    std::vector<Hypergraph> classes;
    for (Color s = 0; s < col.colors(); ++s) {
        classes.push_back(col.color_class(s));
        ++trace.classes_scanned;
        if (auto p = find_loose_path3(classes.back())) {
            trace.mono_path = ColoredPath{s, std::move(*p)};
            trace.terminal = {TerminalKind::MonoPFound, 0,
                              "color " + std::to_string(s) + " contains P"};
            return trace;
        }
    }

    if (col.order() < 5) {
        trace.terminal = {TerminalKind::Inconclusive, 1, "purification needs at least 5 vertices"};
        return trace;
    }
    try {
        for (const Hypergraph& h : classes) {
            trace.certificates.push_back(purify(h));
            trace.blanks.push_back(trace.certificates.back().deleted);
        }
    } catch (const Error& e) {
        trace.terminal = {TerminalKind::FalsificationWitness, 1, e.what()};
        return trace;
    }
    run_counting(col, trace);
    return trace;
}

PipelineTrace audit_with_blanks(const Coloring& col, std::vector<std::vector<Triple>> blanks) {
    if (blanks.size() != col.colors()) throw InvalidInput("one blank set per color is required");
    for (Color s = 0; s < col.colors(); ++s)
        for (const Triple& t : blanks[s])
            if (t.c >= col.order() || col.color_of(t) != s)
                throw InvalidInput("blank triple does not belong to its color class");

    PipelineTrace trace;
    trace.order = col.order();
    trace.colors = col.colors();
    trace.m = static_cast<std::int64_t>(col.order()) - 2 * static_cast<std::int64_t>(col.colors());
    trace.blanks = std::move(blanks);
    run_counting(col, trace);
    return trace;
}

}  // namespace ramsey3
