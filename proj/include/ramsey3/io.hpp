#pragma once

#include <iosfwd>
#include <vector>

#include "ramsey3/constructions.hpp"
#include "ramsey3/core.hpp"
#include "ramsey3/lemma.hpp"
#include "ramsey3/pipeline.hpp"

namespace ramsey3 {

// Hypergraph files: `p hgraph N`, then `e a b c` per edge; `c` lines are
// comments.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(const Hypergraph& h, std::ostream& out);

// Coloring files: `p hcol N n`, then `e a b c s` for every triple of K³_N.
Coloring read_coloring(std::istream& in);
void write_coloring(const Coloring& col, std::ostream& out);

void write_certificate(const DeletionCertificate& cert, std::ostream& out);

/// One `stage:` block per stage reached, then a `result:` line.
void write_trace(const PipelineTrace& trace, std::ostream& out);

/// TSV with header `n lower upper_old upper_new exact best_upper`; absent
/// values are written as `-`.
void write_bounds(const std::vector<BoundsRow>& rows, std::ostream& out);

/// `color s` followed by the three edges as `e a b c`.
void write_witness(const ColoredPath& path, std::ostream& out);

}  // namespace ramsey3
