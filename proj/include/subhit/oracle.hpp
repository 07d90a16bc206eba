#ifndef SUBHIT_ORACLE_HPP
#define SUBHIT_ORACLE_HPP

#include "subhit/caps.hpp"
#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"

#include <vector>

namespace subhit {

// All (sigma-)H-subgraph occurrences as vertex sets: each sorted,
// deduplicated, and the family sorted lexicographically. Throws
// ResourceLimitError past caps.oracle_vertices.
std::vector<std::vector<int>> occurrences(const Graph& g, const PatternInfo& info,
                                          const Caps& caps);
std::vector<std::vector<int>> occurrences(const ColoredGraph& g, const PatternInfo& info,
                                          const Caps& caps);

// Exact minimum hitting set over ground set {0..n-1} via branch and bound
// (unit propagation, dominance reductions, component decomposition with
// memoization, disjoint-packing lower bound, greedy incumbent). With
// budget >= 0 the search may stop once optimum > budget is certain and
// returns budget + 1; otherwise returns the optimum and, if solution is
// non-null, stores one optimal set. Throws ResourceLimitError past
// caps.state_limit search nodes.
int min_hitting_set(int n, const std::vector<std::vector<int>>& family,
                    const Caps& caps, int budget = -1,
                    std::vector<int>* solution = nullptr);

// Convenience: occurrences + min_hitting_set.
int oracle_optimum(const Graph& g, const PatternInfo& info, const Caps& caps,
                   int budget = -1, std::vector<int>* solution = nullptr);
int oracle_optimum(const ColoredGraph& g, const PatternInfo& info, const Caps& caps,
                   int budget = -1, std::vector<int>* solution = nullptr);

} // namespace subhit

#endif
