#include <doctest.h>

#include <sstream>

#include "ramsey3/constructions.hpp"
#include "ramsey3/gen.hpp"
#include "ramsey3/satencode.hpp"

using namespace ramsey3;

TEST_SUITE("satencode") {

TEST_CASE("instance sizes") {
    const auto c27 = encode(2, 7);
    CHECK(c27.variables == 70);
    CHECK(c27.path_copies == 630);
    CHECK(c27.clauses.size() == 35 + 2 * 630 + 1);

    const auto c28 = encode(2, 8);
    CHECK(c28.variables == 112);
    CHECK(c28.path_copies == 5040);
    CHECK(c28.clauses.size() == 10137);

    CHECK_THROWS_AS(encode(2, 6), OrderTooSmall);
    CHECK_THROWS_AS(encode(0, 8), InvalidInput);
}

TEST_CASE("clause layout") {
    const auto cnf = encode(3, 7);
    CHECK(cnf.clauses.front() == Clause{1, 2, 3});
    CHECK(cnf.clauses[35].size() == 3);
    for (int lit : cnf.clauses[35]) CHECK(lit < 0);
    CHECK(cnf.clauses.back() == Clause{1});
    CHECK(cnf.variable({4, 5, 6}, 2) == 34 * 3 + 3);
}

TEST_CASE("DIMACS header and terminators") {
    const auto cnf = encode(2, 7);
    std::ostringstream out;
    write_dimacs(cnf, out);
    std::istringstream in(out.str());
    std::string line;
    std::size_t clauses = 0;
    bool header = false;
    while (std::getline(in, line)) {
        if (line.rfind("c", 0) == 0) continue;
        if (line.rfind("p cnf", 0) == 0) {
            CHECK(line == "p cnf 70 1296");
            header = true;
            continue;
        }
        CHECK(line.substr(line.size() - 2) == " 0");
        ++clauses;
    }
    CHECK(header);
    CHECK(clauses == 1296);
}

TEST_CASE("P-free colorings satisfy the encoding") {
    const auto col = lower_bound_coloring(2);  // 2 colors on 7 vertices
    const auto model = model_from_coloring(col);
    CHECK(satisfies(encode(2, 7), model));
    CHECK(decode_model(model, 2, 7) == col);

    const auto bad = random_coloring(7, 2, 5);
    CHECK_FALSE(satisfies(encode(2, 7), model_from_coloring(bad)));
}

TEST_CASE("round trip through solver text") {
    const auto col = lower_bound_coloring(2);
    std::ostringstream text;
    text << "c solver\ns SATISFIABLE\nv";
    for (int lit : model_from_coloring(col)) text << ' ' << lit;
    text << " 0\n";
    std::istringstream in(text.str());
    const auto model = parse_model(in);
    CHECK(model.size() == 70);
    CHECK(decode_model(model, 2, 7) == col);

    std::istringstream plain("1 -2 3\n-4 0\n");
    CHECK(parse_model(plain) == std::vector<int>{1, -2, 3, -4});
    std::istringstream junk("v 1 x 0\n");
    CHECK_THROWS_AS(parse_model(junk), ParseError);
}

TEST_CASE("decode picks the smallest true color") {
    auto model = model_from_coloring(lower_bound_coloring(2));
    for (int& lit : model) lit = std::abs(lit);  // every variable true
    // all triples in color 0 then: K3_7 contains P
    CHECK_THROWS_AS(decode_model(model, 2, 7), ModelInvalid);
}

TEST_CASE("decode rejects incomplete or oversized models") {
    CHECK_THROWS_AS(decode_model(std::vector<int>{1, -2}, 2, 7), UncoloredTriple);
    CHECK_THROWS_AS(decode_model(std::vector<int>{71}, 2, 7), ModelInvalid);
}

}  // TEST_SUITE
