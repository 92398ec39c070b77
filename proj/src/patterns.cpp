#include "ramsey3/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ramsey3 {

namespace {

using EdgeIds = std::vector<std::uint32_t>;

bool disjoint(const Triple& e, const Triple& f) noexcept { return shared_count(e, f) == 0; }

// Edges through x meeting `middle` only in x.
void collect_ends(const HypergraphIndex& idx, std::uint32_t middle, VertexId x, EdgeIds& out) {
    out.clear();
    const Triple& m = idx.edge(middle);
    for (std::uint32_t i : idx.incident(x))
        if (shared_count(idx.edge(i), m) == 1) out.push_back(i);
}

Embedding make_path(const Triple& e1, const Triple& e2, const Triple& e3) {
    return {PatternKind::LoosePath3, {e1, e2, e3}, {*single_common(e1, e2), *single_common(e2, e3)}};
}

Embedding make_gadget(const std::array<VertexId, 5>& v) {
    auto edges = gadget_edges(v);
    return {PatternKind::Gadget, {edges.begin(), edges.end()}, {v.begin(), v.end()}};
}

// Calls visit(v1..v5) for every F assignment with v1 < v4 (one per reversal
// pair).
template <typename Visit>
void for_each_gadget(const HypergraphIndex& idx, Visit&& visit) {
    const auto edges = idx.graph().edges();
    for (const Triple& base : edges) {
        const VertexId a = base.a, b = base.b, c = base.c;
        for (VertexId d : idx.thirds(a, b)) {
            if (d <= c || !idx.has(a, c, d) || !idx.has(b, c, d)) continue;
            std::array<VertexId, 4> clique{a, b, c, d};
            do {
                const auto [v1, v2, v3, v4] = clique;
                if (v1 > v4) continue;
                for (VertexId z : idx.thirds(v2, v3)) {
                    if (z == v1 || z == v4) continue;
                    if (idx.has(v1, v2, z) && idx.has(v3, v4, z)) visit({v1, v2, v3, v4, z});
                }
            } while (std::next_permutation(clique.begin(), clique.end()));
        }
    }
}

}  // namespace

std::string_view to_string(PatternKind kind) noexcept {
    switch (kind) {
        case PatternKind::LoosePath3: return "P";
        case PatternKind::LooseCycle3: return "C";
        case PatternKind::Gadget: return "F";
    }
    return "?";
}

std::size_t pattern_order(PatternKind kind) noexcept {
    switch (kind) {
        case PatternKind::LoosePath3: return 7;
        case PatternKind::LooseCycle3: return 6;
        case PatternKind::Gadget: return 5;
    }
    return 0;
}

std::size_t pattern_size(PatternKind kind) noexcept {
    return kind == PatternKind::Gadget ? 7 : 3;
}

Hypergraph pattern_hypergraph(PatternKind kind) {
    switch (kind) {
        case PatternKind::LoosePath3: return Hypergraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}});
        case PatternKind::LooseCycle3: return Hypergraph(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
        case PatternKind::Gadget: {
            auto e = gadget_edges({0, 1, 2, 3, 4});
            return Hypergraph(5, {e.begin(), e.end()});
        }
    }
    return {};
}

std::array<Triple, 7> gadget_edges(const std::array<VertexId, 5>& v) {
    return {make_triple(v[0], v[1], v[2]), make_triple(v[0], v[1], v[3]),
            make_triple(v[0], v[2], v[3]), make_triple(v[1], v[2], v[3]),
            make_triple(v[0], v[1], v[4]), make_triple(v[1], v[2], v[4]),
            make_triple(v[2], v[3], v[4])};
}

bool is_valid_embedding(const Embedding& emb, const Hypergraph& host) {
    for (const Triple& e : emb.edges)
        if (!host.contains(e)) return false;

    switch (emb.kind) {
        case PatternKind::LoosePath3: {
            if (emb.edges.size() != 3 || emb.roles.size() != 2) return false;
            const auto& e = emb.edges;
            auto x = single_common(e[0], e[1]);
            auto y = single_common(e[1], e[2]);
            return x && y && *x != *y && disjoint(e[0], e[2]) && emb.roles[0] == *x &&
                   emb.roles[1] == *y;
        }
        case PatternKind::LooseCycle3: {
            if (emb.edges.size() != 3 || emb.roles.size() != 3) return false;
            const auto& e = emb.edges;
            auto p = single_common(e[0], e[1]);
            auto q = single_common(e[1], e[2]);
            auto r = single_common(e[2], e[0]);
            return p && q && r && *p != *q && *q != *r && *p != *r && emb.roles[0] == *p &&
                   emb.roles[1] == *q && emb.roles[2] == *r;
        }
        case PatternKind::Gadget: {
            if (emb.edges.size() != 7 || emb.roles.size() != 5) return false;
            std::array<VertexId, 5> v{};
            std::copy(emb.roles.begin(), emb.roles.end(), v.begin());
            std::array<VertexId, 5> sorted = v;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            const auto expected = gadget_edges(v);
            return std::equal(expected.begin(), expected.end(), emb.edges.begin());
        }
    }
    return false;
}

std::optional<Embedding> find_loose_path3(const Hypergraph& h) {
    return find_loose_path3(HypergraphIndex(h));
}

std::optional<Embedding> find_loose_path3(const HypergraphIndex& idx) {
    const auto m = static_cast<std::uint32_t>(idx.graph().size());
    std::optional<std::array<std::uint32_t, 3>> best;
    std::array<EdgeIds, 3> ends;

    for (std::uint32_t mid = 0; mid < m; ++mid) {
        const auto verts = idx.edge(mid).vertices();
        for (int k = 0; k < 3; ++k) collect_ends(idx, mid, verts[k], ends[k]);
        for (int xi = 0; xi < 3; ++xi) {
            for (int yi = 0; yi < 3; ++yi) {
                if (xi == yi || ends[yi].empty()) continue;
                for (std::uint32_t e1 : ends[xi]) {
                    if (best && e1 > (*best)[0]) break;
                    for (std::uint32_t e3 : ends[yi]) {
                        if (e3 <= e1 || !disjoint(idx.edge(e1), idx.edge(e3))) continue;
                        std::array<std::uint32_t, 3> cand{e1, mid, e3};
                        if (!best || cand < *best) best = cand;
                        break;
                    }
                }
            }
        }
    }
    if (!best) return std::nullopt;
    return make_path(idx.edge((*best)[0]), idx.edge((*best)[1]), idx.edge((*best)[2]));
}

std::optional<Embedding> find_loose_cycle3(const Hypergraph& h) {
    return find_loose_cycle3(HypergraphIndex(h));
}

std::optional<Embedding> find_loose_cycle3(const HypergraphIndex& idx) {
    const auto m = static_cast<std::uint32_t>(idx.graph().size());
    EdgeIds seconds;
    for (std::uint32_t i = 0; i < m; ++i) {
        const Triple& e1 = idx.edge(i);
        seconds.clear();
        for (VertexId v : e1.vertices())
            for (std::uint32_t j : idx.incident(v))
                if (j > i && shared_count(e1, idx.edge(j)) == 1) seconds.push_back(j);
        std::sort(seconds.begin(), seconds.end());

        for (std::uint32_t j : seconds) {
            const Triple& e2 = idx.edge(j);
            const VertexId p = *single_common(e1, e2);
            std::optional<Triple> e3;
            for (VertexId q : e1.vertices()) {
                if (q == p) continue;
                for (VertexId r : e2.vertices()) {
                    if (r == p) continue;
                    for (VertexId z : idx.thirds(q, r)) {
                        if (e1.contains(z) || e2.contains(z)) continue;
                        Triple cand = make_triple(q, r, z);
                        if (cand > e2 && (!e3 || cand < *e3)) e3 = cand;
                    }
                }
            }
            if (e3)
                return Embedding{PatternKind::LooseCycle3,
                                 {e1, e2, *e3},
                                 {p, *single_common(e2, *e3), *single_common(*e3, e1)}};
        }
    }
    return std::nullopt;
}

std::optional<Embedding> find_gadget_f(const Hypergraph& h) {
    return find_gadget_f(HypergraphIndex(h));
}

std::optional<Embedding> find_gadget_f(const HypergraphIndex& idx) {
    std::optional<std::array<VertexId, 5>> best;
    for_each_gadget(idx, [&](const std::array<VertexId, 5>& roles) {
        if (!best || roles < *best) best = roles;
    });
    if (!best) return std::nullopt;
    return make_gadget(*best);
}

std::optional<Embedding> find_pattern(PatternKind kind, const Hypergraph& h) {
    switch (kind) {
        case PatternKind::LoosePath3: return find_loose_path3(h);
        case PatternKind::LooseCycle3: return find_loose_cycle3(h);
        case PatternKind::Gadget: return find_gadget_f(h);
    }
    return std::nullopt;
}

std::vector<Embedding> enumerate_loose_path3(const Hypergraph& h) {
    HypergraphIndex idx(h);
    const auto m = static_cast<std::uint32_t>(h.size());
    std::vector<std::array<std::uint32_t, 3>> found;
    std::array<EdgeIds, 3> ends;
    for (std::uint32_t mid = 0; mid < m; ++mid) {
        const auto verts = idx.edge(mid).vertices();
        for (int k = 0; k < 3; ++k) collect_ends(idx, mid, verts[k], ends[k]);
        for (int xi = 0; xi < 3; ++xi)
            for (int yi = xi + 1; yi < 3; ++yi)
                for (std::uint32_t f : ends[xi])
                    for (std::uint32_t g : ends[yi])
                        if (disjoint(idx.edge(f), idx.edge(g)))
                            found.push_back({std::min(f, g), mid, std::max(f, g)});
    }
    std::sort(found.begin(), found.end());

    std::vector<Embedding> out;
    out.reserve(found.size());
    for (const auto& [a, b, c] : found) out.push_back(make_path(idx.edge(a), idx.edge(b), idx.edge(c)));
    return out;
}

std::vector<Embedding> enumerate_gadget_f(const Hypergraph& h) {
    HypergraphIndex idx(h);
    std::vector<std::array<VertexId, 5>> found;
    for_each_gadget(idx, [&](const std::array<VertexId, 5>& roles) { found.push_back(roles); });
    std::sort(found.begin(), found.end());
    std::vector<Embedding> out;
    out.reserve(found.size());
    for (const auto& roles : found) out.push_back(make_gadget(roles));
    return out;
}

namespace {

// Depth-first search over injective maps pattern -> host. `on_complete`
// returns true to stop the search.
class InjectiveMaps {
  public:
    InjectiveMaps(PatternKind kind, const Hypergraph& host)
        : host_(host), k_(pattern_order(kind)), by_last_(k_), image_(k_), used_(host.order(), false) {
        const Hypergraph pattern = pattern_hypergraph(kind);
        for (const Triple& e : pattern.edges()) by_last_[e.c].push_back(e);
    }

    bool run(const std::function<bool(const std::vector<VertexId>&)>& on_complete) {
        if (host_.order() < k_) return false;
        return extend(0, on_complete);
    }

  private:
    bool extend(std::size_t depth, const std::function<bool(const std::vector<VertexId>&)>& done) {
        if (depth == k_) return done(image_);
        for (VertexId v = 0; v < host_.order(); ++v) {
            if (used_[v]) continue;
            image_[depth] = v;
            bool ok = true;
            for (const Triple& e : by_last_[depth]) {
                if (!host_.contains(make_triple(image_[e.a], image_[e.b], image_[e.c]))) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used_[v] = true;
            bool stop = extend(depth + 1, done);
            used_[v] = false;
            if (stop) return true;
        }
        return false;
    }

    const Hypergraph& host_;
    std::size_t k_;
    std::vector<std::vector<Triple>> by_last_;
    std::vector<VertexId> image_;
    std::vector<bool> used_;
};

}  // namespace

bool oracle_contains(PatternKind kind, const Hypergraph& h) {
    if (h.size() < pattern_size(kind)) return false;
    InjectiveMaps maps(kind, h);
    return maps.run([](const std::vector<VertexId>&) { return true; });
}

std::size_t oracle_count_copies(PatternKind kind, const Hypergraph& h) {
    const Hypergraph pattern = pattern_hypergraph(kind);
    std::set<std::vector<Triple>> copies;
    InjectiveMaps maps(kind, h);
    maps.run([&](const std::vector<VertexId>& image) {
        std::vector<Triple> edges;
        for (const Triple& e : pattern.edges())
            edges.push_back(make_triple(image[e.a], image[e.b], image[e.c]));
        std::sort(edges.begin(), edges.end());
        copies.insert(std::move(edges));
        return false;
    });
    return copies.size();
}

bool LoosePathGuard::has_end_at(const Triple& middle, VertexId connector, const Triple& avoid) const {
    for (const Triple& g : by_vertex_[connector])
        if (shared_count(g, middle) == 1 && disjoint(g, avoid)) return true;
    return false;
}

bool LoosePathGuard::closes_path(const Triple& e) const {
    // e as the middle edge
    for (VertexId x : e.vertices()) {
        for (const Triple& f : by_vertex_[x]) {
            if (shared_count(f, e) != 1) continue;
            for (VertexId y : e.vertices())
                if (y != x && has_end_at(e, y, f)) return true;
        }
    }
    // e as an end edge
    for (VertexId x : e.vertices()) {
        for (const Triple& f : by_vertex_[x]) {
            if (shared_count(f, e) != 1) continue;
            for (VertexId y : f.vertices())
                if (y != x && has_end_at(f, y, e)) return true;
        }
    }
    return false;
}

void LoosePathGuard::add(const Triple& e) {
    for (VertexId v : e.vertices()) by_vertex_[v].push_back(e);
}

}  // namespace ramsey3
