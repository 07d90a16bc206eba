#ifndef SUBHIT_EMBED_HPP
#define SUBHIT_EMBED_HPP

#include "subhit/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace subhit {

// A pattern piece to embed: a subgraph of the pattern H with per-vertex
// requirements on the host image. Embeddings are injective homomorphisms
// (piece edges map to host edges; non-edges are unconstrained).
//   breq[i] == 0   : image unconstrained
//   breq[i] == -1  : image must be a host boundary vertex (any label)
//   breq[i] == l>0 : image must be the host boundary vertex labeled l
// colored: the host must be colored and the image of piece vertex i must
// have color hvertex[i] (sigma-respecting embedding).
struct Piece {
    int k = 0;
    std::vector<std::uint64_t> adj;
    std::vector<int> hvertex;
    std::vector<int> breq;
    bool colored = false;

    int add_vertex(int hv, int req = 0);
    void add_edge(int a, int b);
};

// Whole pattern H as a piece; colored pieces demand sigma-respecting images.
Piece piece_from_pattern(const Graph& h, bool colored);

// Deterministic pattern order: BFS from the constrained vertices (smallest
// id first), or from the max-degree/smallest-id vertex when unconstrained;
// disconnected pieces continue from the next unvisited vertex by that rule.
std::vector<int> piece_order(const Piece& p);

// Host candidates are tried in ascending id order. The callback receives the
// image indexed by piece vertex; return false to stop the enumeration.
// Both throw ContractViolationError when a colored piece meets an uncolored
// host vertex.
void enumerate_embeddings(const Piece& p, const SmallGraph& host,
                          std::uint64_t forbidden,
                          const std::function<bool(const std::vector<int>&)>& cb);
bool find_embedding(const Piece& p, const SmallGraph& host,
                    std::uint64_t forbidden, std::vector<int>* image = nullptr);

// Large-host variants used by the brute-force oracle and the generators'
// verification paths. host_color may be null for an uncolored host.
void enumerate_embeddings(const Piece& p, const Graph& host,
                          const std::vector<int>* host_color,
                          const std::vector<char>* forbidden,
                          const std::function<bool(const std::vector<int>&)>& cb);
bool find_embedding(const Piece& p, const Graph& host,
                    const std::vector<int>* host_color,
                    const std::vector<char>* forbidden,
                    std::vector<int>* image = nullptr);

} // namespace subhit

#endif
