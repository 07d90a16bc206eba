#ifndef SUBHIT_COLORFUL_SOLVER_HPP
#define SUBHIT_COLORFUL_SOLVER_HPP

#include "subhit/caps.hpp"
#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"
#include "subhit/solve.hpp"
#include "subhit/treedecomp.hpp"

#include <vector>

namespace subhit {

// One color region of the host: the subgraph on the colors of a single
// pattern component, with colors renumbered to that component's vertices.
struct ComponentInstance {
    ColoredGraph g;
    Graph pattern;
    std::vector<int> host_vertices; // instance id -> original host id
};

// A sigma-H-subgraph needs one copy of every component of H, and the color
// regions are pairwise disjoint, so hitting all copies of the cheapest
// component hits every sigma-H-subgraph.
std::vector<ComponentInstance> split_components(const ColoredGraph& g,
                                                const PatternInfo& info);

// Path pattern: sigma-subgraphs are exactly the source-sink paths of the
// layered digraph of the color classes, so the optimum is a minimum vertex
// cut (computed by max-flow on the node-split network).
SolveResult solve_path(const ColoredGraph& g, const PatternInfo& info);

// Clique pattern: every sigma-clique lies inside some bag, so a subset DP
// over deleted bag vertices suffices.
SolveResult solve_clique(const ColoredGraph& g, const NiceDecomposition& nd,
                         const PatternInfo& info);

// General connected pattern: DP states are (deleted bag subset, family of
// separator t-chunks predicted to occur in the final graph). Also correct
// for cliques and paths, just slower.
SolveResult solve_general(const ColoredGraph& g, const NiceDecomposition& nd,
                          const PatternInfo& info, const Caps& caps,
                          const SolveOptions& opts = {});

// Dispatcher: splits a disconnected pattern into component instances and
// keeps the cheapest region; connected patterns go to the special case
// solver that applies.
SolveResult solve_colorful(const ColoredGraph& g, const NiceDecomposition& nd,
                           const PatternInfo& info, const Caps& caps,
                           const SolveOptions& opts = {});

} // namespace subhit

#endif
