#ifndef SUBHIT_CAPS_HPP
#define SUBHIT_CAPS_HPP

#include <cstdint>

namespace subhit {

// Resource caps guarding the exponential corners of the algorithms.
// Defaults suit interactive desk-scale use; SUBHIT_CAPS overrides them
// (comma-separated key=value, keys matching the field names below, e.g.
// "oracle_vertices=600,state_limit=5000000").
struct Caps {
    int pattern_vertices = 10;        // |V(H)| for every solver and analysis
    int oracle_vertices = 14;         // host size for the brute-force oracle
    int witness_vertices = 64;        // hard cap of the small-graph machinery
    std::int64_t state_limit = 2000000; // DP states across one solve
};

// Caps with SUBHIT_CAPS applied on top of the defaults.
// Throws ParseError on malformed entries or unknown keys.
Caps caps_from_env();

} // namespace subhit

#endif
