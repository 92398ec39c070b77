#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/gen.hpp"
#include "ramsey3/pipeline.hpp"

using namespace ramsey3;
using ramsey3::testing::hg;

namespace {

Coloring relabel(const Coloring& col, const std::vector<VertexId>& perm) {
    std::vector<Color> out;
    for (const Triple& t : all_triples(col.order()))
        out.push_back(col.color_of(make_triple(perm[t.a], perm[t.b], perm[t.c])));
    return Coloring(col.order(), col.colors(), std::move(out));
}

std::optional<GraphPath> slow_path3(const PairGraph& g) {
    std::set<std::pair<VertexId, VertexId>> e(g.edges().begin(), g.edges().end());
    auto adj = [&](VertexId x, VertexId y) { return e.count({std::min(x, y), std::max(x, y)}) > 0; };
    VertexId top = g.vertices().empty() ? 0 : g.vertices().back() + 1;
    for (VertexId a = 0; a < top; ++a)
        for (VertexId b = 0; b < top; ++b)
            for (VertexId c = 0; c < top; ++c)
                for (VertexId d = 0; d < top; ++d) {
                    std::set<VertexId> s{a, b, c, d};
                    if (s.size() == 4 && adj(a, b) && adj(b, c) && adj(c, d)) return GraphPath{a, b, c, d};
                }
    return std::nullopt;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("threshold values") {
    CHECK(threshold(1) == 9);
    CHECK(threshold(2) == 13);
    CHECK(threshold(16) == 51);  // 18n+1 = 289 is a square
    CHECK(threshold(21) == 64);
    CHECK(threshold(22) == 66);
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        const long double real = 2.0L * n + 2.0L + std::sqrt(static_cast<long double>(18 * n + 1));
        REQUIRE(threshold(n) == static_cast<std::uint64_t>(std::ceil(real - 1e-12L)));
    }
}

TEST_CASE("bracket is positive from the threshold on") {
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        const std::uint64_t m = threshold(n) - 2 * n;
        REQUIRE(bracket_positive(n, m));
        REQUIRE(bracket_positive(n, m + 1));
    }
    CHECK_FALSE(bracket_positive(1, 5));
    CHECK(bracket_positive(1, 6));
}

TEST_CASE("pigeonhole bound equals its expansion") {
    for (std::uint64_t n = 1; n <= 60; ++n)
        for (std::uint64_t m = 3; m <= 80; ++m) {
            REQUIRE(compare(pigeonhole_bound(n, m), pigeonhole_expanded(n, m)) == 0);
            const Rational N{static_cast<std::int64_t>(2 * n + m), 1};
            REQUIRE((compare(pigeonhole_bound(n, m), N) > 0) == bracket_positive(n, m));
        }
    CHECK_THROWS_AS(pigeonhole_bound(3, 2), InvalidInput);
}

TEST_CASE("find_path3_in_graph examples") {
    CHECK(find_path3_in_graph(PairGraph({{0, 1}, {1, 2}, {2, 3}})) == GraphPath{0, 1, 2, 3});
    CHECK_FALSE(find_path3_in_graph(PairGraph({{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(find_path3_in_graph(PairGraph({{0, 1}, {0, 2}, {0, 3}, {0, 4}})));
    CHECK_FALSE(find_path3_in_graph(PairGraph()));
    CHECK_THROWS_AS(PairGraph({{2, 2}}), SameVertex);
}

TEST_CASE("path search agrees with brute force") {
    SplitMix64 rng(808);
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<std::pair<VertexId, VertexId>> e;
        const auto n = static_cast<VertexId>(4 + rng.uniform_below(5));
        for (VertexId v = 0; v < n; ++v)
            for (VertexId w = v + 1; w < n; ++w)
                if (rng.uniform_below(4) == 0) e.emplace_back(v, w);
        const PairGraph g(e);
        const auto fast = find_path3_in_graph(g);
        REQUIRE(fast == slow_path3(g));
        if (g.edges().size() > g.vertices().size()) REQUIRE(fast.has_value());
    }
}

TEST_CASE("case analysis: loose path") {
    const auto h = hg(9, {{0, 1, 2}, {1, 2, 3}, {1, 2, 4}, {0, 1, 5}, {0, 1, 6}, {2, 3, 7}, {2, 3, 8}});
    const auto w = case_analysis(h, {0, 1, 2, 3});
    CHECK(w.case_number == 1);
    CHECK(w.embedding.kind == PatternKind::LoosePath3);
    CHECK(w.v5 == 4);
    CHECK(w.w == 5);
    CHECK(w.u == 7);
    CHECK(is_valid_embedding(w.embedding, h));
}

TEST_CASE("case analysis: cycle with w = u") {
    const auto h = hg(6, {{0, 1, 2}, {0, 1, 4}, {0, 1, 5}, {1, 2, 3}, {2, 3, 4}, {2, 3, 5}, {1, 2, 4}});
    const auto w = case_analysis(h, {0, 1, 2, 3});
    CHECK(w.case_number == 2);
    CHECK(w.embedding.kind == PatternKind::LooseCycle3);
    CHECK(w.w == 5);
    CHECK(w.u == 5);
    CHECK(is_valid_embedding(w.embedding, h));
}

TEST_CASE("case analysis: cycle with w = v4") {
    const auto h = hg(7, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {2, 3, 6}});
    const auto w = case_analysis(h, {0, 1, 2, 3});
    CHECK(w.case_number == 3);
    CHECK(w.w == 3);
    CHECK(w.u == 6);
    CHECK(is_valid_embedding(w.embedding, h));
}

TEST_CASE("case analysis: cycle with u = v1") {
    const auto h = hg(6, {{0, 1, 2}, {0, 1, 4}, {0, 1, 5}, {1, 2, 3}, {1, 2, 4}, {2, 3, 4}, {0, 2, 3}});
    const auto w = case_analysis(h, {0, 1, 2, 3});
    CHECK(w.case_number == 4);
    CHECK(w.w == 5);
    CHECK(w.u == 0);
    CHECK(is_valid_embedding(w.embedding, h));
}

TEST_CASE("case analysis: gadget") {
    const auto f = pattern_hypergraph(PatternKind::Gadget);
    const auto w = case_analysis(f, {0, 1, 2, 3});
    CHECK(w.case_number == 5);
    CHECK(w.embedding.kind == PatternKind::Gadget);
    CHECK(w.embedding.roles == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(is_valid_embedding(w.embedding, f));
}

TEST_CASE("case analysis rejects thin pairs") {
    const auto h = hg(7, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    CHECK_THROWS_AS(case_analysis(h, {0, 1, 2, 3}), PairDegreeTooLow);
    CHECK_THROWS_AS(case_analysis(h, {0, 1, 1, 3}), InvalidInput);
}

TEST_CASE("case analysis always yields a valid witness") {
    SplitMix64 rng(1201);
    std::size_t checked = 0;
    while (checked < 300) {
        const auto h = ramsey3::testing::random_hypergraph(8, 30 + rng.uniform_below(60), rng);
        const auto perm = ramsey3::testing::random_permutation(8, rng);
        const GraphPath p{perm[0], perm[1], perm[2], perm[3]};
        bool thick = true;
        for (int i = 0; i < 3; ++i) thick = thick && pair_degree(h, p[i], p[i + 1]) >= 3;
        if (!thick) continue;
        ++checked;
        const auto w = case_analysis(h, p);
        REQUIRE(is_valid_embedding(w.embedding, h));
        REQUIRE(w.case_number >= 1);
        REQUIRE(w.case_number <= 5);
    }
}

TEST_CASE("audit finds a monochromatic P first") {
    const Coloring mono(7, 1, std::vector<Color>(35, 0));
    const auto t = audit(mono);
    CHECK(t.terminal.kind == TerminalKind::MonoPFound);
    CHECK(t.terminal.stage == 0);
    REQUIRE(t.mono_path);
    CHECK(is_valid_embedding(t.mono_path->witness, mono.color_class(0)));
}

TEST_CASE("audit below five vertices stops at purification") {
    const Coloring c(4, 1, std::vector<Color>(4, 0));
    const auto t = audit(c);
    CHECK(t.terminal.kind == TerminalKind::Inconclusive);
    CHECK(t.terminal.stage == 1);
}

TEST_CASE("audit of the five-color lower-bound coloring") {
    const auto t = audit(lower_bound_coloring(5));
    CHECK(t.blank_total == 10);
    CHECK(t.uncolored == 10);
    CHECK(t.colored_counts == std::vector<std::size_t>{9, 8, 7, 6, 5});
    CHECK(t.chosen == 0);
    CHECK(t.min_blank_on_uncolored == std::size_t{3});
    CHECK(t.gt_vertices == 10);
    CHECK(t.gt_edges == 9);
    CHECK_FALSE(t.closed_bound);
    CHECK(t.terminal.kind == TerminalKind::Inconclusive);
    CHECK(t.terminal.stage == 5);
}

TEST_CASE("audit of lower-bound colorings matches the recount") {
    for (std::size_t n : {1u, 2u, 3u}) {
        const auto t = audit(lower_bound_coloring(n));
        CHECK(t.blank_total == 10);
        CHECK(t.uncolored == 10);
        CHECK(t.chosen == 0);
        CHECK(t.gt_vertices == n + 5);
        CHECK(t.gt_edges == n + 4);
        CHECK(t.terminal.kind == TerminalKind::Inconclusive);
    }
}

TEST_CASE("audit never falsifies on relabeled P-free colorings") {
    SplitMix64 rng(77);
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto base = lower_bound_coloring(n);
        for (int trial = 0; trial < 5; ++trial) {
            const auto col = relabel(base, ramsey3::testing::random_permutation(n + 5, rng));
            const auto t = audit(col);
            REQUIRE(t.terminal.kind == TerminalKind::Inconclusive);
            for (std::size_t c : t.colored_counts) REQUIRE(t.chosen_count >= c);
        }
    }
}

TEST_CASE("counting stages on a full class reach the case analysis") {
    const Coloring mono(7, 1, std::vector<Color>(35, 0));
    const auto t = audit_with_blanks(mono, {{}});
    CHECK(t.uncolored == 0);
    CHECK(t.gt_edges == 21);
    CHECK(t.terminal.kind == TerminalKind::FalsificationWitness);
    CHECK(t.terminal.stage == 7);
    REQUIRE(t.case_witness);
    CHECK(t.case_witness->case_number == 1);
    CHECK_THROWS_AS(audit_with_blanks(mono, {}), InvalidInput);
}

}  // TEST_SUITE
