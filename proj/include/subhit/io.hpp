#ifndef SUBHIT_IO_HPP
#define SUBHIT_IO_HPP

#include "subhit/graph.hpp"
#include "subhit/treedecomp.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace subhit {

// PACE-style graph format: comment lines start with 'c', a single header
// "p <descriptor> <n> <m>", then one "u v" line per edge, vertices 1-based.
Graph read_gr(std::istream& in);
Graph read_gr_file(const std::string& path);
void write_gr(std::ostream& out, const Graph& g,
              const std::string& descriptor = "tw");

// Coloring sidecar: one "vertex color" line per vertex, both 1-based; the
// color is a pattern vertex id. Every vertex must be colored exactly once.
std::vector<int> read_coloring(std::istream& in, int n);
std::vector<int> read_coloring_file(const std::string& path, int n);
void write_coloring(std::ostream& out, const std::vector<int>& color);

// PACE .td format: header "s td <#bags> <max bag size> <#vertices>",
// bag lines "b <id> <v...>", then one line per tree edge, all 1-based.
TreeDecomposition read_td(std::istream& in, int* declared_n = nullptr);
TreeDecomposition read_td_file(const std::string& path, int* declared_n = nullptr);
void write_td(std::ostream& out, const TreeDecomposition& td, int n);

} // namespace subhit

#endif
