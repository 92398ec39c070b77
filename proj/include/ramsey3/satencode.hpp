#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "ramsey3/core.hpp"
#include "ramsey3/patterns.hpp"

namespace ramsey3 {

class UncoloredTriple : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

/// A decoded model whose coloring still has a monochromatic P, or a model
/// that mentions variables outside the instance.
class ModelInvalid : public InvalidInput {
  public:
    using InvalidInput::InvalidInput;
};

using Clause = std::vector<int>;

/// "n colors on K³_N without a monochromatic P" as CNF.
///
/// Variable (t, s) is lex_rank(t) * colors + s + 1. Clauses, in order: one
/// at-least-one-color clause per triple, one clause per (color, P copy)
/// forbidding all three edges in that color, and a unit clause putting
/// {0,1,2} in color 0. There are no at-most-one clauses: a model with
/// several true colors on a triple still yields a valid coloring by taking
/// the smallest one.
struct CnfInstance {
    std::size_t order = 0;
    std::size_t colors = 0;
    std::size_t variables = 0;
    std::size_t path_copies = 0;
    std::vector<Clause> clauses;

    int variable(const Triple& t, Color s) const noexcept {
        return static_cast<int>(lex_rank(t, order) * colors + s + 1);
    }
};

CnfInstance encode(std::size_t colors, std::size_t order);

void write_dimacs(const CnfInstance& cnf, std::ostream& out);

/// Reads solver output: `v` lines, or a bare list of signed integers.
/// `c` and `s` lines are skipped; zeros are separators.
std::vector<int> parse_model(std::istream& in);

/// Maps each triple to its smallest true color and checks every class is
/// P-free. Variables missing from the model count as false.
Coloring decode_model(std::span<const int> model, std::size_t colors, std::size_t order);

/// True if the model satisfies every clause.
bool satisfies(const CnfInstance& cnf, std::span<const int> model);

/// Full assignment that makes exactly the coloring's own variables true.
std::vector<int> model_from_coloring(const Coloring& col);

}  // namespace ramsey3
