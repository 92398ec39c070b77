#include <doctest.h>

#include <algorithm>
#include <array>
#include <optional>

#include "helpers.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/patterns.hpp"

using namespace ramsey3;
using ramsey3::testing::hg;
using ramsey3::testing::random_hypergraph;

namespace {

constexpr std::array<PatternKind, 3> kAllKinds{PatternKind::LoosePath3, PatternKind::LooseCycle3,
                                               PatternKind::Gadget};

// Lex-min (e1, e2, e3) with e1 < e3 over all ordered edge triples.
std::optional<std::array<Triple, 3>> slow_first_path(const Hypergraph& h) {
    std::optional<std::array<Triple, 3>> best;
    for (const Triple& a : h.edges())
        for (const Triple& b : h.edges())
            for (const Triple& c : h.edges()) {
                if (!(a < c)) continue;
                if (shared_count(a, b) != 1 || shared_count(b, c) != 1 || shared_count(a, c) != 0)
                    continue;
                std::array<Triple, 3> cand{a, b, c};
                if (!best || cand < *best) best = cand;
            }
    return best;
}

std::optional<std::array<Triple, 3>> slow_first_cycle(const Hypergraph& h) {
    const auto e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            for (std::size_t k = j + 1; k < e.size(); ++k) {
                auto p = single_common(e[i], e[j]);
                auto q = single_common(e[j], e[k]);
                auto r = single_common(e[k], e[i]);
                if (p && q && r && *p != *q && *q != *r && *p != *r)
                    return std::array<Triple, 3>{e[i], e[j], e[k]};
            }
    return std::nullopt;
}

std::optional<std::array<VertexId, 5>> slow_first_gadget(const Hypergraph& h) {
    std::optional<std::array<VertexId, 5>> best;
    const auto n = static_cast<VertexId>(h.order());
    std::array<VertexId, 5> v{};
    for (v[0] = 0; v[0] < n; ++v[0])
        for (v[1] = 0; v[1] < n; ++v[1])
            for (v[2] = 0; v[2] < n; ++v[2])
                for (v[3] = v[0] + 1; v[3] < n; ++v[3])
                    for (v[4] = 0; v[4] < n; ++v[4]) {
                        auto s = v;
                        std::sort(s.begin(), s.end());
                        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
                        auto edges = gadget_edges(v);
                        if (std::all_of(edges.begin(), edges.end(),
                                        [&](const Triple& t) { return h.contains(t); }))
                            if (!best || v < *best) best = v;
                    }
    return best;
}

}  // namespace

TEST_SUITE("patterns") {

TEST_CASE("pattern shapes") {
    for (PatternKind k : kAllKinds) {
        const auto p = pattern_hypergraph(k);
        CHECK(p.order() == pattern_order(k));
        CHECK(p.size() == pattern_size(k));
    }
    // degree sequence (2,2,1,1,1,1,1)
    const auto p = pattern_hypergraph(PatternKind::LoosePath3);
    std::vector<std::size_t> deg;
    for (VertexId v = 0; v < 7; ++v) deg.push_back(p.degree(v));
    std::sort(deg.rbegin(), deg.rend());
    CHECK(deg == std::vector<std::size_t>{2, 2, 1, 1, 1, 1, 1});
}

TEST_CASE("find_loose_path3 examples") {
    auto p = find_loose_path3(hg(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}));
    REQUIRE(p);
    CHECK(p->roles == std::vector<VertexId>{2, 4});
    CHECK(is_valid_embedding(*p, hg(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})));

    CHECK_FALSE(find_loose_path3(complete_hypergraph(6)));
    for (std::size_t n = 3; n <= 12; ++n) CHECK_FALSE(find_loose_path3(star_hypergraph(n, 0)));
}

TEST_CASE("find_loose_cycle3 examples") {
    const auto h = hg(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    auto c = find_loose_cycle3(h);
    REQUIRE(c);
    std::vector<VertexId> connectors = c->roles;
    std::sort(connectors.begin(), connectors.end());
    CHECK(connectors == std::vector<VertexId>{0, 2, 4});
    CHECK(is_valid_embedding(*c, h));

    CHECK_FALSE(find_loose_cycle3(hg(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}})));
    CHECK_FALSE(find_loose_cycle3(complete_hypergraph(5)));
}

TEST_CASE("find_gadget_f examples") {
    const auto f = pattern_hypergraph(PatternKind::Gadget);
    auto emb = find_gadget_f(f);
    REQUIRE(emb);
    CHECK(emb->roles == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(is_valid_embedding(*emb, f));

    CHECK(find_gadget_f(complete_hypergraph(5)));
    CHECK(oracle_contains(PatternKind::Gadget, complete_hypergraph(5)));

    const auto missing = f.without(std::vector<Triple>{{1, 2, 4}});  // v2v3v5
    CHECK_FALSE(find_gadget_f(missing));
    CHECK_FALSE(oracle_contains(PatternKind::Gadget, missing));
}

TEST_CASE("oracle examples") {
    CHECK(oracle_contains(PatternKind::LoosePath3, complete_hypergraph(7)));
    CHECK(oracle_contains(PatternKind::LooseCycle3, complete_hypergraph(6)));
    SplitMix64 rng(2);
    for (int i = 0; i < 50; ++i) {
        std::vector<Triple> edges;
        for (const Triple& t : all_triples(7))
            if (edges.size() < 6 && rng.uniform_below(3) == 0) edges.push_back(t);
        CHECK_FALSE(oracle_contains(PatternKind::Gadget, Hypergraph(7, edges)));
    }
}

TEST_CASE("P copy counts in K7 and K8") {
    CHECK(oracle_count_copies(PatternKind::LoosePath3, complete_hypergraph(7)) == 630);
    CHECK(enumerate_loose_path3(complete_hypergraph(7)).size() == 630);
    CHECK(oracle_count_copies(PatternKind::LoosePath3, complete_hypergraph(8)) == 5040);
    CHECK(enumerate_loose_path3(complete_hypergraph(8)).size() == 5040);
}

TEST_CASE("enumerated P copies are distinct, sorted and valid") {
    const auto k8 = complete_hypergraph(8);
    const auto all = enumerate_loose_path3(k8);
    for (std::size_t i = 0; i < all.size(); ++i) {
        REQUIRE(is_valid_embedding(all[i], k8));
        REQUIRE(all[i].edges[0] < all[i].edges[2]);
        if (i > 0) REQUIRE(all[i - 1].edges < all[i].edges);
    }
}

TEST_CASE("stars contain none of the patterns") {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto s = star_hypergraph(n, static_cast<VertexId>(n / 2));
        for (PatternKind k : kAllKinds) {
            CHECK_FALSE(oracle_contains(k, s));
            CHECK_FALSE(find_pattern(k, s));
        }
    }
}

TEST_CASE("one or two edges contain no pattern") {
    const auto all = all_triples(8);
    for (std::size_t i = 0; i < all.size(); i += 3)
        for (std::size_t j = i; j < all.size(); j += 5) {
            std::vector<Triple> edges{all[i]};
            if (j != i) edges.push_back(all[j]);
            const Hypergraph h(8, edges);
            for (PatternKind k : kAllKinds) REQUIRE_FALSE(find_pattern(k, h));
        }
}

TEST_CASE("witnesses are lexicographically first") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 7 + rng.uniform_below(2);
        const auto h = random_hypergraph(n, 3 + rng.uniform_below(20), rng);

        auto p = find_loose_path3(h);
        auto slow_p = slow_first_path(h);
        REQUIRE(p.has_value() == slow_p.has_value());
        if (p) {
            REQUIRE(is_valid_embedding(*p, h));
            REQUIRE(std::equal(p->edges.begin(), p->edges.end(), slow_p->begin()));
        }

        auto c = find_loose_cycle3(h);
        auto slow_c = slow_first_cycle(h);
        REQUIRE(c.has_value() == slow_c.has_value());
        if (c) {
            REQUIRE(is_valid_embedding(*c, h));
            REQUIRE(std::equal(c->edges.begin(), c->edges.end(), slow_c->begin()));
        }
    }
    for (int trial = 0; trial < 150; ++trial) {
        const auto h = random_hypergraph(6, 40 + rng.uniform_below(60), rng);
        auto f = find_gadget_f(h);
        auto slow_f = slow_first_gadget(h);
        REQUIRE(f.has_value() == slow_f.has_value());
        if (f) {
            REQUIRE(is_valid_embedding(*f, h));
            REQUIRE(std::equal(f->roles.begin(), f->roles.end(), slow_f->begin()));
        }
    }
}

TEST_CASE("detectors agree with the oracle on sampled hosts") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 6 + rng.uniform_below(4);
        const auto h = random_hypergraph(n, 1 + rng.uniform_below(30), rng);
        for (PatternKind k : kAllKinds) REQUIRE(find_pattern(k, h).has_value() == oracle_contains(k, h));
    }
}

TEST_CASE("embedding validation rejects wrong shapes") {
    const auto k7 = complete_hypergraph(7);
    Embedding bad{PatternKind::LoosePath3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}, {2, 4}};
    CHECK_FALSE(is_valid_embedding(bad, k7));
    Embedding not_in_host{PatternKind::LoosePath3, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}, {2, 4}};
    CHECK_FALSE(is_valid_embedding(not_in_host, hg(7, {{0, 1, 2}, {2, 3, 4}})));
    CHECK(is_valid_embedding(not_in_host, k7));
}

TEST_CASE("path guard matches a full rescan") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 7 + rng.uniform_below(3);
        LoosePathGuard guard(n);
        std::vector<Triple> edges;
        for (const Triple& t : all_triples(n)) {
            if (rng.uniform_below(4) != 0) continue;
            std::vector<Triple> with = edges;
            with.push_back(t);
            const bool expect = find_loose_path3(Hypergraph(n, with)).has_value();
            REQUIRE(guard.closes_path(t) == expect);
            if (!expect) {
                guard.add(t);
                edges.push_back(t);
            }
        }
    }
}

}  // TEST_SUITE
