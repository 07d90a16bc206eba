#ifndef SUBHIT_WITNESS_HPP
#define SUBHIT_WITNESS_HPP

#include "subhit/caps.hpp"
#include "subhit/graph.hpp"
#include "subhit/pattern.hpp"

#include <cstdint>
#include <vector>

namespace subhit {

struct WitnessStats {
    std::int64_t enhance_calls = 0;
    int excess = 0;               // non-boundary vertices plus non-boundary edges
    std::int64_t size_bound = 0;  // witness_size_bound at build time
};

// Documented witness size bound: 2^|V(H)| * (|V(H)|+|E(H)|) * |V(H)|^|V(H)|
// * max(1,t)^{mu*}. For t = 0 only boundaryless chunks contribute, hence
// the max. Saturates at INT64_MAX.
std::int64_t witness_size_bound(const PatternInfo& info, int t);

// Non-boundary vertices plus edges not inside the boundary.
int witness_excess(const SmallGraph& w);

// Witness extraction: starting from the boundary-induced subgraph, for
// every t-chunk over the host's labels run enhance(c, X): find the first
// c-embedding avoiding X in the original host, keep its image vertices and
// the images of the chunk's edges, and while |X| < |V(H)| recurse on
// X + {v} for every image vertex v. The result is a subgraph of the host
// with the same boundary and equal extended profile. Vertex origins follow
// the host's orig fields (host index when unset).
SmallGraph build_witness(const PatternInfo& info, const SmallGraph& host,
                         const Caps& caps, WitnessStats* stats = nullptr);

// Greedy single-vertex minimization: repeatedly deletes the smallest-id
// non-boundary vertex whose removal keeps the extended profile equal,
// until none qualifies. Deterministic.
SmallGraph minimize_witness(const PatternInfo& info, const SmallGraph& w);

// Boundaried-graph forms. source_vertex[i] is the vertex of the source
// graph that witness vertex i came from.
struct WitnessGraph {
    BoundariedGraph g;
    std::vector<int> source_vertex;
};

WitnessGraph build_witness(const PatternInfo& info, const BoundariedGraph& g,
                           const Caps& caps, WitnessStats* stats = nullptr);
WitnessGraph minimize_witness(const PatternInfo& info, const WitnessGraph& w);

} // namespace subhit

#endif
