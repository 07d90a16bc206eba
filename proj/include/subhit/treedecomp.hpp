#ifndef SUBHIT_TREEDECOMP_HPP
#define SUBHIT_TREEDECOMP_HPP

#include "subhit/graph.hpp"

#include <string>
#include <vector>

namespace subhit {

// Tree decomposition: bags of vertices plus a tree on the bag indices.
// A single bag with no tree edges is a valid tree.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags; // each sorted ascending
    std::vector<std::pair<int, int>> tree_edges;

    int width() const; // max bag size - 1; -1 for an empty decomposition
};

struct ValidationReport {
    bool ok = true;
    std::string violation; // human-readable first violation, with witnesses
};

// Checks: tree shape, every vertex occurs in a connected nonempty set of
// bags, every edge is inside some bag, bag contents are in range.
ValidationReport validate(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination ordering heuristic; ties broken by smallest vertex.
// Always returns a valid decomposition (validated by the caller's tests).
TreeDecomposition heuristic_decompose(const Graph& g);

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
    NodeKind kind = NodeKind::leaf;
    int vertex = -1;           // the introduced/forgotten vertex
    std::vector<int> bag;      // sorted ascending
    std::vector<int> children; // 0, 1 or 2 entries
    int parent = -1;
};

// Nice tree decomposition with empty root and leaf bags, binary joins with
// equal child bags, and introduce/forget nodes changing the bag by one
// vertex. t is the label budget (= max bag size); lambda assigns each graph
// vertex a label in {1..t} such that labels are injective on every bag.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;
    int t = 0;
    std::vector<int> lambda;

    std::vector<int> postorder() const; // children before parents
    void check(const Graph& g) const;   // structural + labeling invariants
};

// Node count is at most make_nice_factor() * max(1, t * n).
int make_nice_factor();

NiceDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

// Assigns lambda top-down: when a vertex enters the bag (walking from the
// root), it takes the smallest label unused in that bag. Called by
// make_nice; exposed for tests.
void compute_lambda(NiceDecomposition& nd, int n);

} // namespace subhit

#endif
