#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "ramsey3/constructions.hpp"
#include "ramsey3/gen.hpp"
#include "ramsey3/io.hpp"

using namespace ramsey3;

namespace {

Hypergraph parse_h(const std::string& text) {
    std::istringstream in(text);
    return read_hypergraph(in);
}

Coloring parse_c(const std::string& text) {
    std::istringstream in(text);
    return read_coloring(in);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("hypergraph round trip") {
    const auto h = random_pfree(9, 3);
    std::ostringstream out;
    write_hypergraph(h, out);
    CHECK(parse_h(out.str()) == h);
}

TEST_CASE("hypergraph parsing") {
    const auto h = parse_h("c comment\np hgraph 6\n\ne 2 1 0\nc mid\ne 3 4 5\n");
    CHECK(h.order() == 6);
    CHECK(h.size() == 2);
    CHECK(h.contains({0, 1, 2}));

    CHECK_THROWS_AS(parse_h(""), ParseError);
    CHECK_THROWS_AS(parse_h("p hgraph 5\ne 0 1 5\n"), ParseError);
    CHECK_THROWS_AS(parse_h("p hgraph 5\ne 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_h("p hgraph 5\ne 0 1 2\ne 2 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_h("p hgraph 5\ne 0 1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_h("p hgraph 5\nx 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_h("p hcol 5 2\n"), ParseError);
}

TEST_CASE("coloring round trip") {
    const auto col = random_coloring(8, 3, 17);
    std::ostringstream out;
    write_coloring(col, out);
    CHECK(parse_c(out.str()) == col);
}

TEST_CASE("coloring parsing") {
    CHECK(parse_c("p hcol 3 2\ne 0 1 2 1\n").color_of({0, 1, 2}) == 1);
    CHECK(parse_c("p hcol 4 2\ne 1 2 3 0\ne 0 1 2 1\ne 0 2 3 0\ne 0 1 3 1\n").assignment()[3] == 0);
    CHECK_THROWS_AS(parse_c("p hcol 4 2\ne 0 1 2 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_c("p hcol 3 2\ne 0 1 2 2\n"), InvalidInput);
    CHECK_THROWS_AS(parse_c("p hcol 3 2\ne 0 1 2 1\ne 0 1 2 0\n"), InvalidInput);
}

TEST_CASE("certificate text") {
    std::ostringstream out;
    write_certificate(purify(complete_hypergraph(6)), out);
    const std::string text = out.str();
    CHECK(text.find("purify order 6 edges 20") == 0);
    CHECK(text.find("class HasC_six") != std::string::npos);
    CHECK(text.find("star_center 0") != std::string::npos);
    CHECK(text.find("total_deleted 10 budget 18") != std::string::npos);
}

TEST_CASE("trace text") {
    std::ostringstream out;
    write_trace(audit(lower_bound_coloring(2)), out);
    const std::string text = out.str();
    CHECK(text.find("audit order 7 colors 2 m 3") == 0);
    for (int s = 0; s <= 5; ++s) CHECK(text.find("stage: " + std::to_string(s)) != std::string::npos);
    CHECK(text.find("stage: 6") == std::string::npos);
    CHECK(text.find("result: Inconclusive stage 5") != std::string::npos);
    CHECK(text.find("closed_bound -105/2") != std::string::npos);
}

TEST_CASE("bounds text") {
    std::ostringstream out;
    write_bounds(bounds_table(7), out);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "n\tlower\tupper_old\tupper_new\texact\tbest_upper");
    std::getline(in, line);
    CHECK(line == "1\t7\t-\t9\t7\t9");
    for (int i = 0; i < 6; ++i) std::getline(in, line);
    CHECK(line == "7\t13\t22\t28\t13\t22");
}

}  // TEST_SUITE
