#ifndef SUBHIT_GRAPH_HPP
#define SUBHIT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace subhit {

// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
// sorted; parallel edges and loops are rejected.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    int add_vertex();
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Connected components, each sorted, ordered by smallest vertex.
    std::vector<std::vector<int>> components() const;
    bool connected() const;

    // Induced subgraph on `verts` (need not be sorted; duplicates rejected).
    // new_to_old[i] is the original id of new vertex i (sorted ascending).
    Graph induced(const std::vector<int>& verts,
                  std::vector<int>* new_to_old = nullptr) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

// Graph with a labeled boundary: an injective labeling of at most t
// distinguished vertices with labels from {1..t}. `boundary` is sorted
// ascending and `labels` is parallel to it.
struct BoundariedGraph {
    Graph g;
    std::vector<int> boundary;
    std::vector<int> labels;

    int label_of(int v) const;        // 0 if v is not a boundary vertex
    int vertex_with_label(int l) const; // -1 if the label is unused
    void check() const;               // throws ContractViolationError
};

// Graph whose vertices are colored by the vertices of a pattern H:
// color[v] in {0..|V(H)|-1}. A sigma-H-subgraph maps each pattern vertex
// a onto a vertex of color a.
struct ColoredGraph {
    Graph g;
    std::vector<int> color;

    void check(int pattern_n) const;  // throws ContractViolationError
};

// Compact graph on at most 64 vertices with bitmask adjacency, used by the
// witness/profile machinery and the colorful DP's glued corner graphs.
// label: 0 for interior vertices, otherwise the boundary label.
// color: -1 when uncolored. orig: id in an ambient host graph, -1 for
// synthetic vertices (glued pattern copies).
struct SmallGraph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> label;
    std::vector<int> color;
    std::vector<int> orig;

    int add_vertex(int lab = 0, int col = -1, int origin = -1);
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    std::uint64_t vertex_mask() const;
    int vertex_with_label(int l) const; // -1 if absent
    std::uint64_t boundary_mask() const;

    // Subgraph on the masked vertices (labels/colors/origins kept).
    SmallGraph sub(std::uint64_t keep) const;

    // Byte encoding unique per (n, adj, label, color); used as a cache key.
    std::string encode() const;
};

// Conversion helpers. Both throw ResourceLimitError past 64 vertices.
SmallGraph to_small(const BoundariedGraph& bg);
SmallGraph to_small(const ColoredGraph& cg);
BoundariedGraph from_small(const SmallGraph& sg);

// Disjoint union with equal-labeled boundary vertices identified; edges are
// unioned. g1's vertices keep their ids, g2's unshared vertices are renamed
// into the next free range in id order. Boundary of the result carries the
// union of the label sets.
BoundariedGraph glue(const BoundariedGraph& g1, const BoundariedGraph& g2);
SmallGraph glue(const SmallGraph& g1, const SmallGraph& g2);

inline int popcount64(std::uint64_t x) { return __builtin_popcountll(x); }

} // namespace subhit

#endif
