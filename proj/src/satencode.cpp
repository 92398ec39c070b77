#include "ramsey3/satencode.hpp"

#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace ramsey3 {

namespace {

std::vector<bool> truth_table(std::span<const int> model, std::size_t variables) {
    std::vector<bool> value(variables + 1, false);
    for (int lit : model) {
        const auto var = static_cast<std::size_t>(std::abs(lit));
        if (var == 0) continue;
        if (var > variables)
            throw ModelInvalid("model mentions variable " + std::to_string(var) + " beyond " +
                               std::to_string(variables));
        value[var] = lit > 0;
    }
    return value;
}

}  // namespace

CnfInstance encode(std::size_t colors, std::size_t order) {
    if (order < 7) throw OrderTooSmall("SAT export needs at least 7 vertices");
    if (colors < 1) throw InvalidInput("SAT export needs at least one color");

    CnfInstance cnf;
    cnf.order = order;
    cnf.colors = colors;
    cnf.variables = binomial(order, 3) * colors;

    const auto triples = all_triples(order);
    for (const Triple& t : triples) {
        Clause c;
        for (Color s = 0; s < colors; ++s) c.push_back(cnf.variable(t, s));
        cnf.clauses.push_back(std::move(c));
    }

    const auto copies = enumerate_loose_path3(Hypergraph(order, triples));
    cnf.path_copies = copies.size();
    for (Color s = 0; s < colors; ++s)
        for (const Embedding& p : copies)
            cnf.clauses.push_back({-cnf.variable(p.edges[0], s), -cnf.variable(p.edges[1], s),
                                   -cnf.variable(p.edges[2], s)});

    cnf.clauses.push_back({cnf.variable({0, 1, 2}, 0)});
    return cnf;
}

void write_dimacs(const CnfInstance& cnf, std::ostream& out) {
    out << "c loose path P, " << cnf.colors << " colors, order " << cnf.order << '\n';
    out << "c variable = lex_rank(triple) * " << cnf.colors << " + color + 1\n";
    out << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
    for (const Clause& c : cnf.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
}

std::vector<int> parse_model(std::istream& in) {
    std::vector<int> model;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok == "s" || tok[0] == 'c' || tok[0] == 's') continue;
        if (tok != "v") ls.seekg(0);
        while (ls >> tok) {
            if (tok == "v") continue;
            std::size_t used = 0;
            int lit = 0;
            try {
                lit = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw ParseError("bad model token '" + tok + "'");
            }
            if (used != tok.size()) throw ParseError("bad model token '" + tok + "'");
            if (lit != 0) model.push_back(lit);
        }
    }
    return model;
}

Coloring decode_model(std::span<const int> model, std::size_t colors, std::size_t order) {
    if (order < 3) throw OrderTooSmall("decode needs at least 3 vertices");
    if (colors < 1) throw InvalidInput("decode needs at least one color");
    const std::size_t total = binomial(order, 3);
    const auto value = truth_table(model, total * colors);

    std::vector<Color> assignment(total);
    const auto triples = all_triples(order);
    for (std::size_t i = 0; i < total; ++i) {
        bool found = false;
        for (Color s = 0; s < colors && !found; ++s) {
            if (value[i * colors + s + 1]) {
                assignment[i] = s;
                found = true;
            }
        }
        if (!found) {
            const Triple& t = triples[i];
            throw UncoloredTriple("triple " + std::to_string(t.a) + " " + std::to_string(t.b) +
                                  " " + std::to_string(t.c) + " has no true color");
        }
    }

    Coloring col(order, colors, std::move(assignment));
    for (Color s = 0; s < colors; ++s) {
        if (auto p = find_loose_path3(col.color_class(s))) {
            const Triple& e = p->edges[0];
            throw ModelInvalid("color " + std::to_string(s) + " contains P starting at " +
                               std::to_string(e.a) + " " + std::to_string(e.b) + " " +
                               std::to_string(e.c));
        }
    }
    return col;
}

bool satisfies(const CnfInstance& cnf, std::span<const int> model) {
    const auto value = truth_table(model, cnf.variables);
    for (const Clause& c : cnf.clauses) {
        bool sat = false;
        for (int lit : c) {
            if (value[static_cast<std::size_t>(std::abs(lit))] == (lit > 0)) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

std::vector<int> model_from_coloring(const Coloring& col) {
    std::vector<int> model;
    const auto assignment = col.assignment();
    model.reserve(assignment.size() * col.colors());
    for (std::size_t i = 0; i < assignment.size(); ++i)
        for (Color s = 0; s < col.colors(); ++s) {
            const int var = static_cast<int>(i * col.colors() + s + 1);
            model.push_back(assignment[i] == s ? var : -var);
        }
    return model;
}

}  // namespace ramsey3
