#include "ramsey3/selfcheck.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey3/gen.hpp"
#include "ramsey3/lemma.hpp"
#include "ramsey3/patterns.hpp"
#include "ramsey3/pipeline.hpp"

namespace ramsey3 {

namespace {

std::vector<std::uint64_t> six_vertex_masks(const SelfcheckOptions& opts) {
    std::vector<std::uint64_t> masks;
    if (!opts.quick) {
        masks.resize(std::uint64_t{1} << 20);
        for (std::uint64_t m = 0; m < masks.size(); ++m) masks[m] = m;
        return masks;
    }
    SplitMix64 rng(opts.seed);
    masks.resize(std::uint64_t{1} << 14);
    for (auto& m : masks) m = rng.next() & ((std::uint64_t{1} << 20) - 1);
    return masks;
}

CheckResult purify_six(const SelfcheckOptions& opts) {
    std::size_t max_deleted = 0, count = 0;
    for (std::uint64_t mask : six_vertex_masks(opts)) {
        const Hypergraph h = hypergraph_from_mask(6, mask);
        try {
            const DeletionCertificate cert = purify(h);
            max_deleted = std::max(max_deleted, cert.total_deleted);
        } catch (const Error& e) {
            return {"purify-six", false, "mask " + std::to_string(mask) + ": " + e.what()};
        }
        ++count;
    }
    return {"purify-six", max_deleted < 18,
            std::to_string(count) + " hypergraphs, max deleted " + std::to_string(max_deleted)};
}

CheckResult f_hitting_five() {
    std::size_t with_f = 0, max_size = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        const Hypergraph h = hypergraph_from_mask(5, mask);
        if (!find_gadget_f(h)) continue;
        ++with_f;
        const auto d = destroy_f_component(h);
        max_size = std::max(max_size, d.size());
        if (find_gadget_f(h.without(d)))
            return {"f-hitting-five", false, "mask " + std::to_string(mask) + " still has F"};
    }
    return {"f-hitting-five", max_size <= 4,
            std::to_string(with_f) + " hypergraphs with F, max hitting set " +
                std::to_string(max_size)};
}

CheckResult detectors_vs_oracle(const SelfcheckOptions& opts) {
    std::size_t checked = 0;
    for (std::uint64_t mask : six_vertex_masks(opts)) {
        const Hypergraph h = hypergraph_from_mask(6, mask);
        for (PatternKind k : {PatternKind::LooseCycle3, PatternKind::Gadget}) {
            if (find_pattern(k, h).has_value() != oracle_contains(k, h))
                return {"detectors-vs-oracle", false,
                        std::string(to_string(k)) + " disagrees on mask " + std::to_string(mask)};
        }
        ++checked;
    }
    SplitMix64 rng(opts.seed ^ 0x5eedULL);
    const std::size_t samples = opts.quick ? 1000 : 10000;
    for (std::size_t i = 0; i < samples; ++i) {
        const std::size_t order = 7 + rng.uniform_below(3);
        const std::uint64_t density = 1 + rng.uniform_below(40);  // percent
        std::vector<Triple> edges;
        for (const Triple& t : all_triples(order))
            if (rng.uniform_below(100) < density) edges.push_back(t);
        const Hypergraph h(order, std::move(edges));
        for (PatternKind k : {PatternKind::LoosePath3, PatternKind::LooseCycle3, PatternKind::Gadget})
            if (find_pattern(k, h).has_value() != oracle_contains(k, h))
                return {"detectors-vs-oracle", false,
                        std::string(to_string(k)) + " disagrees on random sample " +
                            std::to_string(i)};
    }
    return {"detectors-vs-oracle", true,
            std::to_string(checked) + " six-vertex and " + std::to_string(samples) +
                " random hypergraphs"};
}

CheckResult path_forcing() {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < 7; ++v)
        for (VertexId w = v + 1; w < 7; ++w) pairs.emplace_back(v, w);
    std::size_t dense = 0;
    for (std::uint32_t mask = 0; mask < (1U << 21); ++mask) {
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (std::size_t i = 0; i < 21; ++i)
            if ((mask >> i) & 1U) edges.push_back(pairs[i]);
        const PairGraph g(std::move(edges));
        if (g.edges().size() <= g.vertices().size()) continue;
        ++dense;
        if (!find_path3_in_graph(g))
            return {"path-forcing", false, "no path in graph mask " + std::to_string(mask)};
    }
    return {"path-forcing", true, std::to_string(dense) + " graphs with |E| > |V|"};
}

CheckResult pigeonhole_arithmetic() {
    for (std::uint64_t n = 1; n <= 1000000; ++n) {
        const std::uint64_t m = threshold(n) - 2 * n;
        if (!bracket_positive(n, m))
            return {"pigeonhole", false, "bracket not positive at n = " + std::to_string(n)};
        const Rational closed = pigeonhole_bound(n, m);
        if (compare(closed, pigeonhole_expanded(n, m)) != 0)
            return {"pigeonhole", false, "closed forms differ at n = " + std::to_string(n)};
        if (compare(closed, {static_cast<std::int64_t>(2 * n + m), 1}) <= 0)
            return {"pigeonhole", false, "bound does not exceed N at n = " + std::to_string(n)};
    }
    return {"pigeonhole", true, "n = 1..1000000"};
}

}  // namespace

std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts) {
    return {purify_six(opts), f_hitting_five(), detectors_vs_oracle(opts), path_forcing(),
            pigeonhole_arithmetic()};
}

}  // namespace ramsey3
