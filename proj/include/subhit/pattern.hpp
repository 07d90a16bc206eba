#ifndef SUBHIT_PATTERN_HPP
#define SUBHIT_PATTERN_HPP

#include "subhit/caps.hpp"
#include "subhit/embed.hpp"
#include "subhit/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace subhit {

// A slice of the pattern H: an induced subgraph H[D] whose boundary (the
// vertices of D with neighbors outside D) equals the neighborhood of its
// interior. Chunks are slices with nonempty connected interior; a chunk is a
// separator chunk when some component B of H - D satisfies N(B) = boundary
// (equivalently, its boundary is a minimal separator).
struct Slice {
    std::uint64_t verts = 0;
    std::uint64_t boundary = 0;
    std::uint64_t interior = 0;
    bool chunk = false;
    bool separator_chunk = false;

    int size() const { return popcount64(verts); }
    int boundary_size() const { return popcount64(boundary); }
};

struct PatternInfo {
    Graph h;
    std::vector<Slice> slices;  // ordered by (|verts|, verts mask)
    int full_slice_id = -1;     // the slice (H, empty boundary)
    int mu = 0;                 // max size of a minimal separator
    int mu_star = 0;            // max boundary size over chunks
    std::vector<std::vector<int>> minimal_separators; // each sorted; list sorted
    bool connected = false;
    bool is_clique = false;
    bool is_path = false;
    std::vector<int> path_order; // endpoints first/last; empty unless is_path
    std::vector<std::vector<int>> comps;
    bool all_components_cliques = false;

    int slice_by_verts(std::uint64_t verts) const; // -1 if no such slice
};

// Full structural analysis of a pattern. Throws ResourceLimitError past
// caps.pattern_vertices and ContractViolationError on an empty pattern.
PatternInfo analyze_pattern(const Graph& h, const Caps& caps);

// Core slice and peelings of P (subset of V(H)): the unique slice whose
// interior is the interior of H[P], and the vertices of P it leaves out.
// Peelings are boundary vertices of H[P] not adjacent to its interior.
struct CoreSplit {
    int slice_id = -1;
    std::uint64_t peelings = 0;
};
CoreSplit core_slice_and_peelings(const PatternInfo& info, std::uint64_t P);

// A t-chunk: a chunk plus an injective labeling of its boundary. labels is
// parallel to the chunk's boundary vertices in ascending order.
struct TChunk {
    int slice_id = -1;
    std::vector<int> labels;
};

// All t-chunks whose labels come from label_pool (sorted ascending),
// enumerated chunk-major then labeling-lexicographic. separator_only
// restricts to separator chunks.
// Matching piece for a labeled chunk: boundary vertices require the host
// vertex carrying their label, interior vertices are unconstrained. When
// colored, every image must carry its pattern vertex as color.
Piece piece_for_tchunk(const PatternInfo& info, const TChunk& tc,
                       bool colored = false);

std::vector<TChunk> enumerate_t_chunks(const PatternInfo& info,
                                       const std::vector<int>& label_pool,
                                       bool separator_only = false);

// Named pattern builders.
Graph make_path(int k);
Graph make_cycle(int k);
Graph make_clique(int k);
Graph make_biclique(int a, int b);
Graph make_paw();
// K_{2,h} with a triangle attached to each of the two degree-h vertices.
Graph make_hh(int h);

// Parses P<k>, C<k>, K<k>, K<a>,<b>, H<h>, paw (underscores and braces
// tolerated: P_4, K_{2,3}). Throws ParseError on anything else.
Graph pattern_from_name(const std::string& name);

} // namespace subhit

#endif
