#include "ramsey3/io.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

namespace ramsey3 {

namespace {

constexpr Color kUnset = std::numeric_limits<Color>::max();

class LineReader {
  public:
    explicit LineReader(std::istream& in) : in(in) {}

    // Next non-blank, non-comment line split into a stream.
    bool next(std::istringstream& fields, std::string& tag) {
        while (std::getline(in, line)) {
            ++line_no;
            fields.clear();
            fields.str(line);
            if (!(fields >> tag) || tag == "c") continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("line " + std::to_string(line_no) + ": " + what);
    }

  private:
    std::istream& in;
    std::size_t line_no = 0;
    std::string line;
};

std::uint64_t read_count(std::istringstream& fields, LineReader& reader, const char* what) {
    long long v = -1;
    if (!(fields >> v) || v < 0) reader.fail(std::string("expected ") + what);
    return static_cast<std::uint64_t>(v);
}

void expect_end(std::istringstream& fields, LineReader& reader) {
    std::string extra;
    if (fields >> extra) reader.fail("unexpected trailing field '" + extra + "'");
}

Triple read_edge(std::istringstream& fields, LineReader& reader, std::size_t order) {
    std::uint64_t v[3];
    for (auto& x : v) {
        x = read_count(fields, reader, "vertex");
        if (x >= order) reader.fail("vertex " + std::to_string(x) + " out of range");
    }
    try {
        return make_triple(static_cast<VertexId>(v[0]), static_cast<VertexId>(v[1]),
                           static_cast<VertexId>(v[2]));
    } catch (const DuplicateVertex& e) {
        reader.fail(e.what());
    }
}

void write_triple(const Triple& t, std::ostream& out) { out << t.a << ' ' << t.b << ' ' << t.c; }

void write_rational(const Rational& r, std::ostream& out) {
    const std::int64_t g = std::max<std::int64_t>(std::gcd(r.num, r.den), 1);
    out << r.num / g;
    if (r.den / g != 1) out << '/' << r.den / g;
}

}  // namespace

Hypergraph read_hypergraph(std::istream& in) {
    LineReader reader(in);
    std::istringstream fields;
    std::string tag;
    if (!reader.next(fields, tag) || tag != "p") reader.fail("missing `p hgraph N` header");
    std::string kind;
    if (!(fields >> kind) || kind != "hgraph") reader.fail("header must be `p hgraph N`");
    const std::size_t order = read_count(fields, reader, "vertex count");
    expect_end(fields, reader);

    std::vector<Triple> edges;
    while (reader.next(fields, tag)) {
        if (tag != "e") reader.fail("unknown line tag '" + tag + "'");
        edges.push_back(read_edge(fields, reader, order));
        expect_end(fields, reader);
    }
    try {
        return Hypergraph(order, std::move(edges));
    } catch (const InvalidInput& e) {
        throw ParseError(e.what());
    }
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << "p hgraph " << h.order() << '\n';
    for (const Triple& e : h.edges()) {
        out << "e ";
        write_triple(e, out);
        out << '\n';
    }
}

Coloring read_coloring(std::istream& in) {
    LineReader reader(in);
    std::istringstream fields;
    std::string tag;
    if (!reader.next(fields, tag) || tag != "p") reader.fail("missing `p hcol N n` header");
    std::string kind;
    if (!(fields >> kind) || kind != "hcol") reader.fail("header must be `p hcol N n`");
    const std::size_t order = read_count(fields, reader, "vertex count");
    const std::size_t colors = read_count(fields, reader, "color count");
    expect_end(fields, reader);
    if (order < 3) reader.fail("coloring needs at least 3 vertices");
    if (colors < 1) reader.fail("coloring needs at least one color");

    std::vector<Color> assignment(binomial(order, 3), kUnset);
    while (reader.next(fields, tag)) {
        if (tag != "e") reader.fail("unknown line tag '" + tag + "'");
        const Triple t = read_edge(fields, reader, order);
        const std::uint64_t s = read_count(fields, reader, "color");
        expect_end(fields, reader);
        if (s >= colors) reader.fail("color " + std::to_string(s) + " out of range");
        Color& slot = assignment[lex_rank(t, order)];
        if (slot != kUnset) reader.fail("triple listed twice");
        slot = static_cast<Color>(s);
    }
    for (Color s : assignment)
        if (s == kUnset) throw InvalidColoring("coloring file does not cover every triple");
    return Coloring(order, colors, std::move(assignment));
}

void write_coloring(const Coloring& col, std::ostream& out) {
    out << "p hcol " << col.order() << ' ' << col.colors() << '\n';
    std::size_t i = 0;
    for (const Triple& t : all_triples(col.order())) {
        out << "e ";
        write_triple(t, out);
        out << ' ' << col.assignment()[i++] << '\n';
    }
}

void write_certificate(const DeletionCertificate& cert, std::ostream& out) {
    out << "purify order " << cert.order << " edges " << cert.edge_count << '\n';
    for (std::size_t i = 0; i < cert.ledger.size(); ++i) {
        const ComponentRecord& rec = cert.ledger[i];
        out << "component " << i << " vertices " << rec.order() << " edges " << rec.edge_count
            << " class " << to_string(rec.cls) << " deleted " << rec.deleted.size() << " budget "
            << 3 * rec.order() << '\n';
        out << "  span";
        for (VertexId v : rec.vertices) out << ' ' << v;
        out << '\n';
        if (rec.star_center) out << "  star_center " << *rec.star_center << '\n';
        if (rec.exceeds_four) out << "  flag more_than_four_deletions\n";
    }
    for (const Triple& e : cert.deleted) {
        out << "deleted ";
        write_triple(e, out);
        out << '\n';
    }
    out << "total_deleted " << cert.total_deleted << " budget " << 3 * cert.order << '\n';
}

void write_trace(const PipelineTrace& t, std::ostream& out) {
    const int reached = t.terminal.stage;
    out << "audit order " << t.order << " colors " << t.colors << " m " << t.m << '\n';

    out << "stage: 0 direct-scan\n";
    out << "  classes_scanned " << t.classes_scanned << '\n';
    if (t.mono_path) {
        out << "  mono_p color " << t.mono_path->color;
        for (const Triple& e : t.mono_path->witness.edges) {
            out << " | ";
            write_triple(e, out);
        }
        out << '\n';
    } else if (t.classes_scanned > 0) {
        out << "  mono_p none\n";
    } else {
        out << "  skipped (blanks supplied)\n";
    }

    if (reached >= 1) {
        out << "stage: 1 purify\n";
        for (std::size_t s = 0; s < t.blanks.size(); ++s)
            out << "  blank color " << s << " count " << t.blanks[s].size() << '\n';
        if (!t.blanks.empty()) {
            out << "  blank_total " << t.blank_total << '\n';
            out << "  r_bound " << t.r_bound << '\n';
        }
    }
    if (reached >= 2 && !t.pair_colors.empty()) {
        out << "stage: 2 pair-coloring\n";
        out << "  pairs " << t.pair_colors.size() << '\n';
        for (std::size_t s = 0; s < t.colored_counts.size(); ++s)
            out << "  colored color " << s << " count " << t.colored_counts[s] << '\n';
        out << "  uncolored " << t.uncolored << '\n';
    }
    if (reached >= 3 && !t.pair_colors.empty()) {
        out << "stage: 3 blank-cover\n";
        out << "  required_blank_per_uncolored " << t.m - 2 << '\n';
        out << "  min_blank_on_uncolored ";
        if (t.min_blank_on_uncolored)
            out << *t.min_blank_on_uncolored << '\n';
        else
            out << "-\n";
        if (t.m > 2)
            out << "  uncolored_cap " << 3 * t.blank_total << '/' << t.m - 2 << '\n';
        else
            out << "  uncolored_cap -\n";
    }
    if (reached >= 4 && !t.colored_counts.empty()) {
        out << "stage: 4 choose-color\n";
        out << "  t " << t.chosen << '\n';
        out << "  colored_pairs_t " << t.chosen_count << '\n';
        out << "  average_bound ";
        write_rational(t.average_bound, out);
        out << '\n';
        out << "  closed_bound ";
        if (t.closed_bound)
            write_rational(*t.closed_bound, out);
        else
            out << '-';
        out << '\n';
        out << "  bracket_positive "
            << (t.bracket_positive ? (*t.bracket_positive ? "yes" : "no") : "-") << '\n';
    }
    if (reached >= 5) {
        out << "stage: 5 pair-graph\n";
        out << "  gt_vertices " << t.gt_vertices << '\n';
        out << "  gt_edges " << t.gt_edges << '\n';
    }
    if (reached >= 6) {
        out << "stage: 6 path\n";
        if (t.path)
            out << "  path " << (*t.path)[0] << ' ' << (*t.path)[1] << ' ' << (*t.path)[2] << ' '
                << (*t.path)[3] << '\n';
        else
            out << "  path none\n";
    }
    if (reached >= 7) {
        out << "stage: 7 case-analysis\n";
        if (t.case_witness) {
            const CaseWitness& c = *t.case_witness;
            out << "  case " << c.case_number << " v5 " << c.v5 << " w " << c.w << " u " << c.u
                << '\n';
            out << "  witness " << to_string(c.embedding.kind);
            for (const Triple& e : c.embedding.edges) {
                out << " | ";
                write_triple(e, out);
            }
            out << '\n';
        } else {
            out << "  witness none\n";
        }
    }
    out << "result: " << to_string(t.terminal.kind) << " stage " << t.terminal.stage << " "
        << t.terminal.detail << '\n';
}

void write_bounds(const std::vector<BoundsRow>& rows, std::ostream& out) {
    out << "n\tlower\tupper_old\tupper_new\texact\tbest_upper\n";
    for (const BoundsRow& r : rows) {
        out << r.n << '\t' << r.lower << '\t';
        if (r.upper_old)
            out << *r.upper_old;
        else
            out << '-';
        out << '\t' << r.upper_new << '\t';
        if (r.exact)
            out << *r.exact;
        else
            out << '-';
        out << '\t' << r.best_upper << '\n';
    }
}

void write_witness(const ColoredPath& path, std::ostream& out) {
    out << "color " << path.color << '\n';
    for (const Triple& e : path.witness.edges) {
        out << "e ";
        write_triple(e, out);
        out << '\n';
    }
}

}  // namespace ramsey3
