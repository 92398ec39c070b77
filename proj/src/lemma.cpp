#include "ramsey3/lemma.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace ramsey3 {

namespace {

std::string describe(const Triple& t) {
    return std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c);
}

std::vector<VertexId> spanned_vertices(std::span<const Triple> edges) {
    std::vector<VertexId> v;
    for (const Triple& e : edges) v.insert(v.end(), {e.a, e.b, e.c});
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

// Smallest-index vertex of maximum degree among `vertices`.
VertexId star_center(const Component& comp) {
    VertexId center = comp.vertices.front();
    std::size_t best = 0;
    for (VertexId v : comp.vertices) {
        auto d = static_cast<std::size_t>(std::count_if(
            comp.edges.begin(), comp.edges.end(), [v](const Triple& e) { return e.contains(v); }));
        if (d > best) {
            best = d;
            center = v;
        }
    }
    return center;
}

// Advances idx to the next k-combination of 0..n-1 in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

NotPFree::NotPFree(Embedding witness)
    : InvalidInput("hypergraph contains a loose path P"), witness_(std::move(witness)) {}

std::string_view to_string(ComponentClass cls) noexcept {
    switch (cls) {
        case ComponentClass::HasCLarge: return "HasC_large";
        case ComponentClass::HasCSix: return "HasC_six";
        case ComponentClass::FComponent: return "FComponent";
        case ComponentClass::Clean: return "Clean";
    }
    return "?";
}

std::vector<Triple> destroy_f_component(const Hypergraph& comp) {
    if (spanned_vertices(comp.edges()).size() != 5)
        throw InvalidInput("F component must span exactly 5 vertices");

    const auto edges = comp.edges();
    const std::size_t m = edges.size();
    std::vector<std::uint32_t> copies;
    for (const Embedding& emb : enumerate_gadget_f(comp)) {
        std::uint32_t mask = 0;
        for (const Triple& e : emb.edges) {
            auto pos = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
            mask |= std::uint32_t{1} << pos;
        }
        copies.push_back(mask);
    }
    if (copies.empty()) throw NoFPresent("component contains no copy of F");

    for (std::size_t k = 1; k <= m; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        do {
            std::uint32_t mask = 0;
            for (std::size_t i : idx) mask |= std::uint32_t{1} << i;
            bool hits_all = std::all_of(copies.begin(), copies.end(),
                                        [mask](std::uint32_t c) { return (c & mask) != 0; });
            if (hits_all) {
                if (k >= 15) throw Falsification("F hitting set of size >= 15");
                std::vector<Triple> out;
                for (std::size_t i : idx) out.push_back(edges[i]);
                return out;
            }
        } while (next_combination(idx, m));
    }
    throw Falsification("deleting every edge failed to destroy F");
}

DeletionCertificate purify(const Hypergraph& h) {
    if (h.order() < 5) throw OrderTooSmall("purify needs at least 5 vertices");
    if (auto p = find_loose_path3(h)) throw NotPFree(std::move(*p));

    DeletionCertificate cert;
    cert.order = h.order();
    cert.edge_count = h.size();

    for (Component& comp : components(h).components) {
        ComponentRecord rec;
        rec.vertices = comp.vertices;
        rec.edge_count = comp.edges.size();
        const std::size_t ni = comp.vertices.size();

        Hypergraph sub(h.order(), comp.edges);
        HypergraphIndex idx(sub);
        if (find_loose_cycle3(idx)) {
            if (ni >= 7) {
                if (rec.edge_count > 3 * ni - 8)
                    throw Falsification("P-free component with C on " + std::to_string(ni) +
                                        " vertices has " + std::to_string(rec.edge_count) +
                                        " > 3n_i-8 edges");
                rec.cls = ComponentClass::HasCLarge;
                rec.deleted = comp.edges;
            } else if (ni == 6) {
                rec.cls = ComponentClass::HasCSix;
                const VertexId center = star_center(comp);
                std::vector<Triple> off_star;
                for (const Triple& e : comp.edges)
                    if (!e.contains(center)) off_star.push_back(e);
                if (rec.edge_count < 18 && rec.edge_count < off_star.size()) {
                    rec.deleted = comp.edges;
                } else {
                    rec.star_center = center;
                    rec.deleted = std::move(off_star);
                }
            } else {
                throw Falsification("loose cycle found on fewer than 6 vertices");
            }
        } else if (find_gadget_f(idx)) {
            if (ni != 5) {
                std::ostringstream msg;
                msg << "C-free component containing F spans " << ni << " vertices, expected 5";
                throw Falsification(msg.str());
            }
            rec.cls = ComponentClass::FComponent;
            rec.deleted = destroy_f_component(sub);
            rec.exceeds_four = rec.deleted.size() > 4;
        }
        cert.deleted.insert(cert.deleted.end(), rec.deleted.begin(), rec.deleted.end());
        cert.ledger.push_back(std::move(rec));
    }
    std::sort(cert.deleted.begin(), cert.deleted.end());
    cert.total_deleted = cert.deleted.size();

    verify_certificate(h, cert);
    return cert;
}

Hypergraph residual(const Hypergraph& h, const DeletionCertificate& cert) {
    return h.without(cert.deleted);
}

void verify_certificate(const Hypergraph& h, const DeletionCertificate& cert) {
    std::size_t sum = 0;
    for (const ComponentRecord& rec : cert.ledger) {
        if (rec.deleted.size() >= 3 * rec.order())
            throw Falsification("component deletion exceeds 3n_i");
        sum += rec.deleted.size();
    }
    if (sum != cert.total_deleted || cert.deleted.size() != cert.total_deleted)
        throw Falsification("ledger does not add up to the total deletion count");
    if (cert.total_deleted >= 3 * h.order())
        throw Falsification("total deletion " + std::to_string(cert.total_deleted) +
                            " is not below 3n = " + std::to_string(3 * h.order()));
    for (const Triple& e : cert.deleted)
        if (!h.contains(e)) throw Falsification("deleted edge " + describe(e) + " is not in H");

    const Hypergraph rest = residual(h, cert);
    HypergraphIndex idx(rest);
    if (auto c = find_loose_cycle3(idx))
        throw Falsification("residual still contains C at " + describe(c->edges[0]));
    if (auto f = find_gadget_f(idx))
        throw Falsification("residual still contains F at " + describe(f->edges[0]));
}

}  // namespace ramsey3
