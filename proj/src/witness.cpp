#include "subhit/witness.hpp"

#include "subhit/embed.hpp"
#include "subhit/errors.hpp"
#include "subhit/profile.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <unordered_set>

namespace subhit {

namespace {

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1u) out.push_back(v);
    return out;
}

} // namespace

std::int64_t witness_size_bound(const PatternInfo& info, int t) {
    const int h = info.h.n();
    const std::int64_t max64 = std::numeric_limits<std::int64_t>::max();
    __int128 bound = 1;
    for (int i = 0; i < h; ++i) bound *= 2;
    bound *= h + info.h.m();
    for (int i = 0; i < h && bound <= max64; ++i) bound *= h;
    const int base = std::max(1, t);
    for (int i = 0; i < info.mu_star && bound <= max64; ++i) bound *= base;
    return bound > max64 ? max64 : static_cast<std::int64_t>(bound);
}

int witness_excess(const SmallGraph& w) {
    int extra_vertices = 0, extra_edges = 0;
    for (int v = 0; v < w.n; ++v)
        if (w.label[v] == 0) ++extra_vertices;
    for (int u = 0; u < w.n; ++u)
        for (int v = u + 1; v < w.n; ++v)
            if (w.has_edge(u, v) && (w.label[u] == 0 || w.label[v] == 0)) ++extra_edges;
    return extra_vertices + extra_edges;
}

SmallGraph build_witness(const PatternInfo& info, const SmallGraph& host,
                         const Caps& caps, WitnessStats* stats) {
    std::vector<int> pool;
    for (int v = 0; v < host.n; ++v)
        if (host.label[v] > 0) pool.push_back(host.label[v]);
    std::sort(pool.begin(), pool.end());

    std::vector<TChunk> chunks = enumerate_t_chunks(info, pool, false);
    std::vector<Piece> pieces;
    pieces.reserve(chunks.size());
    for (const TChunk& tc : chunks) pieces.push_back(piece_for_tchunk(info, tc));

    std::uint64_t keep = host.boundary_mask();
    std::vector<std::uint64_t> keep_adj(host.n, 0);
    for (int u = 0; u < host.n; ++u) {
        if (host.label[u] == 0) continue;
        for (int v : mask_vertices(host.adj[u] & host.boundary_mask()))
            keep_adj[u] |= std::uint64_t{1} << v;
    }

    const int h = info.h.n();
    std::int64_t calls = 0;
    std::vector<std::unordered_set<std::uint64_t>> visited(chunks.size());
    std::vector<int> image;
    std::function<void(std::size_t, std::uint64_t)> enhance =
        [&](std::size_t ci, std::uint64_t forbidden) {
            if (!visited[ci].insert(forbidden).second) return;
            if (++calls > caps.state_limit)
                throw ResourceLimitError("build_witness: enhance call count exceeds cap (state_limit=" +
                                         std::to_string(caps.state_limit) + ")");
            if (!find_embedding(pieces[ci], host, forbidden, &image)) return;
            const Piece& p = pieces[ci];
            std::uint64_t img_mask = 0;
            for (int i = 0; i < p.k; ++i) {
                keep |= std::uint64_t{1} << image[i];
                img_mask |= std::uint64_t{1} << image[i];
                for (int j = i + 1; j < p.k; ++j)
                    if ((p.adj[i] >> j) & 1u) {
                        keep_adj[image[i]] |= std::uint64_t{1} << image[j];
                        keep_adj[image[j]] |= std::uint64_t{1} << image[i];
                    }
            }
            if (popcount64(forbidden) < h)
                for (int v : mask_vertices(img_mask))
                    enhance(ci, forbidden | (std::uint64_t{1} << v));
        };
    for (std::size_t ci = 0; ci < chunks.size(); ++ci) enhance(ci, 0);

    SmallGraph out;
    std::vector<int> old_of;
    std::vector<int> new_id(host.n, -1);
    for (int v : mask_vertices(keep)) {
        new_id[v] = out.add_vertex(host.label[v], host.color[v],
                                   host.orig[v] >= 0 ? host.orig[v] : v);
        old_of.push_back(v);
    }
    for (int i = 0; i < out.n; ++i)
        for (int j = i + 1; j < out.n; ++j)
            if ((keep_adj[old_of[i]] >> old_of[j]) & 1u) out.add_edge(i, j);

    if (stats) {
        stats->enhance_calls = calls;
        stats->excess = witness_excess(out);
        stats->size_bound = witness_size_bound(info, static_cast<int>(pool.size()));
    }
    return out;
}

SmallGraph minimize_witness(const PatternInfo& info, const SmallGraph& w) {
    const ExtendedProfile base = extended_profile(info, w);
    SmallGraph cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < cur.n; ++v) {
            if (cur.label[v] != 0) continue;
            SmallGraph cand = cur.sub(cur.vertex_mask() & ~(std::uint64_t{1} << v));
            if (extended_profile(info, cand) == base) {
                cur = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    return cur;
}

WitnessGraph build_witness(const PatternInfo& info, const BoundariedGraph& g,
                           const Caps& caps, WitnessStats* stats) {
    g.check();
    SmallGraph sw = build_witness(info, to_small(g), caps, stats);
    WitnessGraph out;
    out.g = from_small(sw);
    out.source_vertex = sw.orig;
    return out;
}

WitnessGraph minimize_witness(const PatternInfo& info, const WitnessGraph& w) {
    SmallGraph sw = minimize_witness(info, to_small(w.g));
    WitnessGraph out;
    out.g = from_small(sw);
    out.source_vertex.reserve(sw.n);
    for (int v = 0; v < sw.n; ++v) {
        int idx = sw.orig[v];
        contract_check(idx >= 0 && idx < static_cast<int>(w.source_vertex.size()),
                       "minimize_witness: provenance index out of range");
        out.source_vertex.push_back(w.source_vertex[idx]);
    }
    return out;
}

} // namespace subhit
