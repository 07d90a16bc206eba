#ifndef SUBHIT_SOLVE_HPP
#define SUBHIT_SOLVE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace subhit {

struct SolveStats {
    std::string method;
    std::int64_t peak_states = 0;  // max live states at any single node
    std::int64_t total_states = 0; // states created across all nodes
    int nice_nodes = 0;
    int t = 0;
};

struct SolveResult {
    int optimum = 0;
    std::vector<int> hitting_set; // sorted vertex ids of an optimum solution
    SolveStats stats;
    std::vector<std::string> state_dump; // populated only when requested
};

struct SolveOptions {
    bool dump_states = false;
    int threads = 1; // reserved; the reference schedule is single threaded
};

} // namespace subhit

#endif
