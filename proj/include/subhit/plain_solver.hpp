#ifndef SUBHIT_PLAIN_SOLVER_HPP
#define SUBHIT_PLAIN_SOLVER_HPP

#include "subhit/caps.hpp"
#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"
#include "subhit/solve.hpp"
#include "subhit/treedecomp.hpp"

namespace subhit {

// Uncolored H-subgraph hitting via the witness-class DP: states are
// (deleted bag subset, extended profile of the processed kept graph), each
// class represented by a small witness graph that is evolved in place and
// compacted when it grows. Handles disconnected patterns; throws
// UnsupportedPatternError for a disconnected union of cliques.
SolveResult solve_plain(const Graph& g, const NiceDecomposition& nd,
                        const PatternInfo& info, const Caps& caps,
                        const SolveOptions& opts = {});

// Single clique pattern: every K_h-subgraph lies inside some bag, so the
// subset DP over deleted bag vertices suffices.
SolveResult solve_plain_clique(const Graph& g, const NiceDecomposition& nd,
                               const PatternInfo& info);

} // namespace subhit

#endif
