#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ramsey3/constructions.hpp"
#include "ramsey3/gen.hpp"
#include "ramsey3/io.hpp"
#include "ramsey3/lemma.hpp"
#include "ramsey3/patterns.hpp"
#include "ramsey3/pipeline.hpp"
#include "ramsey3/satencode.hpp"

namespace py = pybind11;
using namespace ramsey3;

namespace {

using TripleTuple = std::tuple<VertexId, VertexId, VertexId>;

std::vector<Triple> to_triples(const std::vector<TripleTuple>& edges) {
    std::vector<Triple> out;
    out.reserve(edges.size());
    for (const auto& [x, y, z] : edges) out.push_back(make_triple(x, y, z));
    return out;
}

std::vector<TripleTuple> to_tuples(std::span<const Triple> edges) {
    std::vector<TripleTuple> out;
    out.reserve(edges.size());
    for (const Triple& t : edges) out.emplace_back(t.a, t.b, t.c);
    return out;
}

py::object embedding_dict(const std::optional<Embedding>& emb) {
    if (!emb) return py::none();
    py::dict d;
    d["kind"] = std::string(to_string(emb->kind));
    d["edges"] = to_tuples(emb->edges);
    d["roles"] = emb->roles;
    return d;
}

Coloring make_coloring(std::size_t order, std::size_t colors, const std::vector<Color>& assignment) {
    return Coloring(order, colors, assignment);
}

template <typename Write, typename Value>
std::string render(Write&& write, const Value& v) {
    std::ostringstream out;
    write(v, out);
    return out.str();
}

}  // namespace

PYBIND11_MODULE(_ramsey3, m) {
    m.doc() = "Loose 3-path Ramsey toolkit";

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<Falsification>(m, "Falsification", PyExc_RuntimeError);

    m.def("threshold", &threshold, py::arg("n"));
    m.def(
        "find_pattern",
        [](const std::string& kind, std::size_t order, const std::vector<TripleTuple>& edges) {
            PatternKind k;
            if (kind == "P") k = PatternKind::LoosePath3;
            else if (kind == "C") k = PatternKind::LooseCycle3;
            else if (kind == "F") k = PatternKind::Gadget;
            else throw InvalidInput("pattern must be P, C or F");
            return embedding_dict(find_pattern(k, Hypergraph(order, to_triples(edges))));
        },
        py::arg("kind"), py::arg("order"), py::arg("edges"));
    m.def(
        "complete_hypergraph", [](std::size_t order) { return to_tuples(complete_hypergraph(order).edges()); },
        py::arg("order"));
    m.def(
        "purify",
        [](std::size_t order, const std::vector<TripleTuple>& edges) {
            const auto cert = purify(Hypergraph(order, to_triples(edges)));
            py::dict d;
            d["deleted"] = to_tuples(cert.deleted);
            d["total_deleted"] = cert.total_deleted;
            py::list comps;
            for (const auto& rec : cert.ledger) {
                py::dict c;
                c["vertices"] = rec.vertices;
                c["class"] = std::string(to_string(rec.cls));
                c["deleted"] = rec.deleted.size();
                comps.append(c);
            }
            d["components"] = comps;
            return d;
        },
        py::arg("order"), py::arg("edges"));
    m.def(
        "lower_bound_coloring",
        [](std::size_t n) {
            const auto col = lower_bound_coloring(n);
            return std::vector<Color>(col.assignment().begin(), col.assignment().end());
        },
        py::arg("n"));
    m.def(
        "random_coloring",
        [](std::size_t order, std::size_t colors, std::uint64_t seed) {
            const auto col = random_coloring(order, colors, seed);
            return std::vector<Color>(col.assignment().begin(), col.assignment().end());
        },
        py::arg("order"), py::arg("colors"), py::arg("seed"));
    m.def(
        "random_pfree", [](std::size_t order, std::uint64_t seed) { return to_tuples(random_pfree(order, seed).edges()); },
        py::arg("order"), py::arg("seed"));
    m.def(
        "find_mono_path",
        [](std::size_t order, std::size_t colors, const std::vector<Color>& assignment) -> py::object {
            const auto found = find_mono_path(make_coloring(order, colors, assignment));
            if (!found) return py::none();
            return py::make_tuple(found->color, embedding_dict(found->witness));
        },
        py::arg("order"), py::arg("colors"), py::arg("assignment"));
    m.def(
        "audit",
        [](std::size_t order, std::size_t colors, const std::vector<Color>& assignment) {
            const auto trace = audit(make_coloring(order, colors, assignment));
            py::dict d;
            d["result"] = to_string(trace.terminal.kind);
            d["stage"] = trace.terminal.stage;
            d["detail"] = trace.terminal.detail;
            d["text"] = render(write_trace, trace);
            return d;
        },
        py::arg("order"), py::arg("colors"), py::arg("assignment"));
    m.def(
        "bounds",
        [](std::uint64_t n_max) {
            py::list rows;
            for (const auto& r : bounds_table(n_max)) {
                py::dict d;
                d["n"] = r.n;
                d["lower"] = r.lower;
                d["upper_old"] = r.upper_old ? py::cast(*r.upper_old) : py::none();
                d["upper_new"] = r.upper_new;
                d["exact"] = r.exact ? py::cast(*r.exact) : py::none();
                d["best_upper"] = r.best_upper;
                rows.append(d);
            }
            return rows;
        },
        py::arg("n_max"));
    m.def(
        "sat_export",
        [](std::size_t colors, std::size_t order) {
            const auto cnf = encode(colors, order);
            return py::make_tuple(cnf.variables, cnf.clauses.size(), render(write_dimacs, cnf));
        },
        py::arg("colors"), py::arg("order"));
    m.def(
        "sat_decode",
        [](const std::vector<int>& model, std::size_t colors, std::size_t order) {
            const auto col = decode_model(model, colors, order);
            return std::vector<Color>(col.assignment().begin(), col.assignment().end());
        },
        py::arg("model"), py::arg("colors"), py::arg("order"));
}
