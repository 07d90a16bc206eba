#include "subhit/errors.hpp"
#include "subhit/pattern.hpp"
#include "subhit/profile.hpp"
#include "subhit/witness.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>

using namespace subhit;

namespace {

bool subgraph_of(const SmallGraph& w, const SmallGraph& host) {
    // Witness vertices carry their host vertex in orig.
    for (int v = 0; v < w.n; ++v) {
        if (w.orig[v] < 0 || w.orig[v] >= host.n)
            return false;
        if (w.label[v] != host.label[w.orig[v]])
            return false;
    }
    for (int u = 0; u < w.n; ++u)
        for (int v = u + 1; v < w.n; ++v)
            if (w.has_edge(u, v) && !host.has_edge(w.orig[u], w.orig[v]))
                return false;
    return true;
}

void check_witness(const PatternInfo& info, const BoundariedGraph& bg,
                   const Caps& caps) {
    SmallGraph host = to_small(bg);
    WitnessStats stats;
    SmallGraph w = build_witness(info, host, caps, &stats);
    CHECK(subgraph_of(w, host));
    // Boundary is preserved exactly.
    std::vector<int> wl, hl;
    for (int v = 0; v < w.n; ++v)
        if (w.label[v] > 0)
            wl.push_back(w.label[v]);
    for (int v = 0; v < host.n; ++v)
        if (host.label[v] > 0)
            hl.push_back(host.label[v]);
    std::sort(wl.begin(), wl.end());
    std::sort(hl.begin(), hl.end());
    CHECK(wl == hl);
    // Equal extended profile, and excess within the documented bound.
    CHECK(extended_profile(info, w) == extended_profile(info, host));
    CHECK(witness_excess(w) <= stats.size_bound);
    CHECK(stats.size_bound ==
          witness_size_bound(info, static_cast<int>(bg.boundary.size())));

    SmallGraph m = minimize_witness(info, w);
    CHECK(m.n <= w.n);
    CHECK(subgraph_of(m, host));
    CHECK(extended_profile(info, m) == extended_profile(info, host));
    // Minimality: deleting any single non-boundary vertex changes the profile.
    for (int v = 0; v < m.n; ++v) {
        if (m.label[v] > 0)
            continue;
        SmallGraph cut = m.sub(m.vertex_mask() & ~(std::uint64_t{1} << v));
        CHECK(!(extended_profile(info, cut) == extended_profile(info, m)));
    }
    // Determinism.
    CHECK(minimize_witness(info, w).encode() == m.encode());
}

} // namespace

TEST_CASE("witness size bound formula and saturation") {
    Caps caps;
    PatternInfo p2 = analyze_pattern(make_path(2), caps);
    // 2^n * (n+m) * n^n * max(1,t)^mu*; the edge has mu* = 0.
    CHECK(witness_size_bound(p2, 0) == 48);
    CHECK(witness_size_bound(p2, 3) == 48);
    PatternInfo p3 = analyze_pattern(make_path(3), caps);
    CHECK(witness_size_bound(p3, 0) == 1080);
    CHECK(witness_size_bound(p3, 3) == 3240);
    PatternInfo k23 = analyze_pattern(make_biclique(2, 3), caps);
    CHECK(witness_size_bound(k23, 1000000) ==
          std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("witnesses preserve profiles on random boundaried hosts") {
    Caps caps;
    std::mt19937 rng(701);
    for (const Graph& h : {make_path(4), make_cycle(4), make_clique(3)}) {
        PatternInfo info = analyze_pattern(h, caps);
        for (int it = 0; it < 8; ++it) {
            int n = 4 + static_cast<int>(rng() % 7);
            int t = 1 + static_cast<int>(rng() % 3);
            if (t > n)
                t = n;
            BoundariedGraph bg = test::random_boundaried(rng, n, t, 0.35);
            check_witness(info, bg, caps);
        }
    }
}

TEST_CASE("witness of a sparse host drops inessential parts") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(3), caps);
    // A long path hanging off the boundary: only a bounded prefix matters.
    BoundariedGraph bg;
    bg.g = make_path(12);
    bg.boundary = {0};
    bg.labels = {1};
    SmallGraph w = minimize_witness(info, build_witness(info, to_small(bg), caps));
    CHECK(w.n < 12);
    CHECK(extended_profile(info, w) == extended_profile(info, to_small(bg)));
}

TEST_CASE("boundaried witness form tracks source vertices") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(3), caps);
    std::mt19937 rng(702);
    BoundariedGraph bg = test::random_boundaried(rng, 8, 2, 0.4);
    WitnessGraph w = minimize_witness(info, build_witness(info, bg, caps));
    w.g.check();
    REQUIRE(w.source_vertex.size() == static_cast<std::size_t>(w.g.g.n()));
    for (auto [u, v] : w.g.g.edges())
        CHECK(bg.g.has_edge(w.source_vertex[u], w.source_vertex[v]));
    std::vector<int> wl = w.g.labels, hl = bg.labels;
    std::sort(wl.begin(), wl.end());
    std::sort(hl.begin(), hl.end());
    CHECK(wl == hl);
    CHECK(witness_subgraph_check(info, w.g, bg));
    CHECK(witness_subgraph_check(info, bg, w.g));
}

TEST_CASE("witness construction respects the enhance call budget") {
    Caps caps;
    caps.state_limit = 3;
    PatternInfo info = analyze_pattern(make_path(4), caps);
    BoundariedGraph bg;
    bg.g = make_clique(9);
    bg.boundary = {0, 1, 2};
    bg.labels = {1, 2, 3};
    CHECK_THROWS_AS(build_witness(info, to_small(bg), caps), ResourceLimitError);
}
