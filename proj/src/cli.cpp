#include "ramsey3/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "ramsey3/constructions.hpp"
#include "ramsey3/gen.hpp"
#include "ramsey3/io.hpp"
#include "ramsey3/lemma.hpp"
#include "ramsey3/pipeline.hpp"
#include "ramsey3/satencode.hpp"
#include "ramsey3/selfcheck.hpp"

namespace ramsey3::cli {

namespace {

template <typename Read>
auto read_file(const std::string& path, Read&& read) {
    if (path == "-") return read(std::cin);
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read(in);
}

// Writes through `body` to `path`, or to `out` when path is empty or "-".
void write_to(const std::string& path, std::ostream& out,
              const std::function<void(std::ostream&)>& body) {
    if (path.empty() || path == "-") {
        body(out);
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write " + path);
    body(file);
}

void report_classes(const Coloring& col, std::ostream& out, bool& any_path) {
    for (Color s = 0; s < col.colors(); ++s) {
        out << "class " << s << ' ';
        if (auto p = find_loose_path3(col.color_class(s))) {
            any_path = true;
            out << "P";
            for (const Triple& e : p->edges) out << " | " << e.a << ' ' << e.b << ' ' << e.c;
            out << '\n';
        } else {
            out << "P-free\n";
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Loose 3-path Ramsey toolkit for 3-uniform hypergraphs", "ramsey3"};
    app.require_subcommand(1);

    std::uint64_t max_n = 0, colors = 0, order = 0, seed = 0;
    std::string coloring_path, hypergraph_path, output, model_path;
    bool quick = false;

    auto* bounds = app.add_subcommand("bounds", "TSV of lower and upper bounds for n = 1..K");
    bounds->add_option("--max-n", max_n, "largest color count")->required()->check(CLI::PositiveNumber);

    auto* lower = app.add_subcommand("construct-lower", "P-free n-coloring of K3_{n+5}");
    lower->add_option("--colors", colors, "number of colors")->required()->check(CLI::PositiveNumber);
    lower->add_option("-o,--output", output, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "report a P-witness or P-free for every class");
    auto* verify_group = verify->add_option_group("input");
    verify_group->add_option("--coloring", coloring_path, "coloring file");
    verify_group->add_option("--hypergraph", hypergraph_path, "hypergraph file");
    verify_group->require_option(1);

    auto* extract = app.add_subcommand("extract", "find a monochromatic P");
    extract->add_option("--coloring", coloring_path, "coloring file")->required();

    auto* audit_cmd = app.add_subcommand("audit", "run the counting argument and print its trace");
    audit_cmd->add_option("--coloring", coloring_path, "coloring file")->required();

    auto* purify_cmd = app.add_subcommand("purify", "delete edges of a P-free hypergraph until no C or F remains");
    purify_cmd->add_option("--hypergraph", hypergraph_path, "hypergraph file")->required();

    auto* gen = app.add_subcommand("gen", "seeded random instances");
    gen->require_subcommand(1);
    auto* gen_col = gen->add_subcommand("coloring", "uniform random coloring");
    gen_col->add_option("--order", order, "vertex count")->required();
    gen_col->add_option("--colors", colors, "number of colors")->required();
    gen_col->add_option("--seed", seed, "SplitMix64 seed")->required();
    gen_col->add_option("-o,--output", output, "output file (default stdout)");
    auto* gen_pfree = gen->add_subcommand("pfree", "greedy maximal P-free hypergraph");
    gen_pfree->add_option("--order", order, "vertex count")->required();
    gen_pfree->add_option("--seed", seed, "SplitMix64 seed")->required();
    gen_pfree->add_option("-o,--output", output, "output file (default stdout)");

    auto* sat_export = app.add_subcommand("sat-export", "DIMACS CNF for n-colorings of K3_N without a monochromatic P");
    sat_export->add_option("--colors", colors, "number of colors")->required();
    sat_export->add_option("--order", order, "vertex count")->required();
    sat_export->add_option("-o,--output", output, "output file (default stdout)");

    auto* sat_decode = app.add_subcommand("sat-decode", "decode and validate a solver model");
    sat_decode->add_option("--model", model_path, "model file")->required();
    sat_decode->add_option("--colors", colors, "number of colors")->required();
    sat_decode->add_option("--order", order, "vertex count")->required();
    sat_decode->add_option("-o,--output", output, "coloring output file (default stdout)");

    auto* selfcheck = app.add_subcommand("selfcheck", "run the exhaustive desk-scale suites");
    selfcheck->add_flag("--quick", quick, "sample 2^14 six-vertex instances instead of 2^20");
    selfcheck->add_option("--seed", seed, "seed for sampled suites");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (*bounds) {
            write_bounds(bounds_table(max_n), out);
            return kSuccess;
        }
        if (*lower) {
            const Coloring col = lower_bound_coloring(colors);
            write_to(output, out, [&](std::ostream& o) { write_coloring(col, o); });
            return kSuccess;
        }
        if (*verify) {
            bool any_path = false;
            if (!coloring_path.empty()) {
                const Coloring col = read_file(coloring_path, read_coloring);
                report_classes(col, out, any_path);
            } else {
                const Hypergraph h = read_file(hypergraph_path, read_hypergraph);
                if (auto p = find_loose_path3(h)) {
                    any_path = true;
                    out << "P";
                    for (const Triple& e : p->edges) out << " | " << e.a << ' ' << e.b << ' ' << e.c;
                    out << '\n';
                } else {
                    out << "P-free\n";
                }
            }
            return any_path ? kSuccess : kNotFound;
        }
        if (*extract) {
            const Coloring col = read_file(coloring_path, read_coloring);
            if (auto found = find_mono_path(col)) {
                write_witness(*found, out);
                return kSuccess;
            }
            if (col.order() >= threshold(col.colors())) {
                err << "FalsificationWitness: no monochromatic P at or above threshold "
                    << threshold(col.colors()) << '\n';
                return kFalsification;
            }
            out << "NotFound\n";
            return kNotFound;
        }
        if (*audit_cmd) {
            const Coloring col = read_file(coloring_path, read_coloring);
            const PipelineTrace trace = audit(col);
            write_trace(trace, out);
            switch (trace.terminal.kind) {
                case TerminalKind::MonoPFound: return kSuccess;
                case TerminalKind::Inconclusive: return kNotFound;
                case TerminalKind::FalsificationWitness: return kFalsification;
            }
        }
        if (*purify_cmd) {
            const Hypergraph h = read_file(hypergraph_path, read_hypergraph);
            try {
                write_certificate(purify(h), out);
            } catch (const NotPFree& e) {
                err << "NotPFree:";
                for (const Triple& t : e.witness().edges) err << " | " << t.a << ' ' << t.b << ' ' << t.c;
                err << '\n';
                return kInvalidInput;
            }
            return kSuccess;
        }
        if (*gen_col) {
            const Coloring col = random_coloring(order, colors, seed);
            write_to(output, out, [&](std::ostream& o) { write_coloring(col, o); });
            return kSuccess;
        }
        if (*gen_pfree) {
            const Hypergraph h = random_pfree(order, seed);
            write_to(output, out, [&](std::ostream& o) { write_hypergraph(h, o); });
            return kSuccess;
        }
        if (*sat_export) {
            const CnfInstance cnf = encode(colors, order);
            write_to(output, out, [&](std::ostream& o) { write_dimacs(cnf, o); });
            return kSuccess;
        }
        if (*sat_decode) {
            const auto model = read_file(model_path, parse_model);
            const Coloring col = decode_model(model, colors, order);
            write_to(output, out, [&](std::ostream& o) { write_coloring(col, o); });
            return kSuccess;
        }
        if (*selfcheck) {
            SelfcheckOptions opts;
            opts.quick = quick;
            if (selfcheck->count("--seed") > 0) opts.seed = seed;
            bool ok = true;
            for (const CheckResult& r : run_selfcheck(opts)) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                ok = ok && r.passed;
            }
            return ok ? kSuccess : kFalsification;
        }
    } catch (const Falsification& e) {
        err << "FalsificationWitness: " << e.what() << '\n';
        return kFalsification;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace ramsey3::cli
