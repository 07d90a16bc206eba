#include "subhit/errors.hpp"
#include "subhit/pattern.hpp"
#include "subhit/profile.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

using namespace subhit;

namespace {

// Existence of an injective edge-preserving map of the slice into the host
// avoiding `dead`, with boundary slice vertices pinned to the host vertices
// carrying `tuple` and interior vertices unconstrained.
bool slice_embeds(const Graph& h, const Slice& s, const std::vector<int>& tuple,
                  const SmallGraph& host, const std::vector<char>& dead) {
    std::vector<int> verts;
    for (int v = 0; v < h.n(); ++v)
        if ((s.verts >> v) & 1u)
            verts.push_back(v);
    std::vector<int> image(verts.size(), -1);
    std::vector<char> used(host.n, 0);
    auto edge_ok = [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j)
            if (h.has_edge(verts[i], verts[j]) &&
                !((host.adj[image[i]] >> image[j]) & 1u))
                return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i, int nb) -> bool {
        if (i == verts.size())
            return true;
        bool is_boundary = ((s.boundary >> verts[i]) & 1u) != 0;
        for (int hv = 0; hv < host.n; ++hv) {
            if (used[hv] || dead[hv])
                continue;
            if (is_boundary && host.label[hv] != tuple[nb])
                continue;
            image[i] = hv;
            if (!edge_ok(i)) {
                image[i] = -1;
                continue;
            }
            used[hv] = 1;
            if (self(self, i + 1, nb + is_boundary))
                return true;
            used[hv] = 0;
            image[i] = -1;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

void check_profile_against_brute(const PatternInfo& info, const SmallGraph& host) {
    ExtendedProfile prof = extended_profile(info, host);
    std::vector<int> labels;
    for (int v = 0; v < host.n; ++v)
        if (host.label[v] > 0)
            labels.push_back(host.label[v]);
    std::sort(labels.begin(), labels.end());
    REQUIRE(prof.boundary_labels == labels);
    const int b = static_cast<int>(labels.size());
    const int h = info.h.n();

    for (std::size_t sid = 0; sid < info.slices.size(); ++sid) {
        const Slice& s = info.slices[sid];
        if (s.verts == 0)
            continue;
        const int k = s.size();
        auto masks = admissible_y_masks(b, std::min(h - k, b));

        // Enumerate candidate labelings: injective tuples over the host
        // labels, one entry per boundary vertex of the slice.
        std::vector<std::vector<int>> tuples{{}};
        for (int i = 0; i < s.boundary_size(); ++i) {
            std::vector<std::vector<int>> next;
            for (const auto& t : tuples)
                for (int lab : labels)
                    if (std::find(t.begin(), t.end(), lab) == t.end()) {
                        next.push_back(t);
                        next.back().push_back(lab);
                    }
            tuples = std::move(next);
        }
        for (const auto& tuple : tuples) {
            auto it = prof.entries.find({static_cast<int>(sid), tuple});
            std::vector<char> dead(host.n, 0);
            bool base = slice_embeds(info.h, s, tuple, host, dead);
            REQUIRE((it != prof.entries.end()) == base);
            if (!base)
                continue;
            for (std::size_t mi = 0; mi < masks.size(); ++mi) {
                std::fill(dead.begin(), dead.end(), 0);
                for (int v = 0; v < host.n; ++v)
                    if (host.label[v] > 0) {
                        int pos = static_cast<int>(
                            std::lower_bound(labels.begin(), labels.end(),
                                             host.label[v]) -
                            labels.begin());
                        if ((masks[mi] >> pos) & 1u)
                            dead[v] = 1;
                    }
                bool alive = slice_embeds(info.h, s, tuple, host, dead);
                bool bit = ((it->second[mi / 64] >> (mi % 64)) & 1u) != 0;
                CHECK(bit == alive);
            }
        }
    }
}

} // namespace

TEST_CASE("admissible deletion masks are complete and ordered") {
    CHECK(admissible_y_masks(3, 1) ==
          std::vector<std::uint32_t>{0, 1, 2, 4});
    CHECK(admissible_y_masks(3, 3) ==
          std::vector<std::uint32_t>{0, 1, 2, 4, 3, 5, 6, 7});
    CHECK(admissible_y_masks(0, 0) == std::vector<std::uint32_t>{0});
    CHECK(admissible_y_masks(4, 2).size() == 11);
}

TEST_CASE("extended profiles match a direct embedding recomputation") {
    Caps caps;
    std::mt19937 rng(601);
    for (const Graph& h : {make_path(4), make_cycle(4), make_paw()}) {
        PatternInfo info = analyze_pattern(h, caps);
        for (int it = 0; it < 12; ++it) {
            int n = 3 + static_cast<int>(rng() % 5);
            int t = 1 + static_cast<int>(rng() % std::min(3, n));
            BoundariedGraph bg = test::random_boundaried(rng, n, t, 0.45);
            check_profile_against_brute(info, to_small(bg));
        }
    }
}

TEST_CASE("profiles are invariant under host vertex renumbering") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(4), caps);
    std::mt19937 rng(602);
    for (int it = 0; it < 15; ++it) {
        BoundariedGraph bg = test::random_boundaried(rng, 7, 2, 0.4);
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        BoundariedGraph pg;
        pg.g = Graph(7);
        for (auto [u, v] : bg.g.edges())
            pg.g.add_edge(perm[u], perm[v]);
        std::vector<std::pair<int, int>> bl;
        for (std::size_t i = 0; i < bg.boundary.size(); ++i)
            bl.push_back({perm[bg.boundary[i]], bg.labels[i]});
        std::sort(bl.begin(), bl.end());
        for (auto [v, l] : bl) {
            pg.boundary.push_back(v);
            pg.labels.push_back(l);
        }
        ExtendedProfile a = extended_profile(info, bg);
        ExtendedProfile c = extended_profile(info, pg);
        CHECK(a == c);
        CHECK(a.encode() == c.encode());
        CHECK(a.fingerprint() == c.fingerprint());
    }
}

TEST_CASE("full slice membership tracks whole-pattern embeddings") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_clique(3), caps);
    BoundariedGraph with;
    with.g = make_clique(4);
    with.boundary = {0};
    with.labels = {1};
    CHECK(extended_profile(info, with).contains_full_slice(info));

    BoundariedGraph without;
    without.g = make_cycle(4);
    without.boundary = {0};
    without.labels = {1};
    CHECK(!extended_profile(info, without).contains_full_slice(info));
}

TEST_CASE("profile implication holds for subgraphs with the same boundary") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(4), caps);
    std::mt19937 rng(603);
    for (int it = 0; it < 15; ++it) {
        BoundariedGraph big = test::random_boundaried(rng, 7, 2, 0.5);
        BoundariedGraph small = big;
        small.g = Graph(7);
        for (auto [u, v] : big.g.edges())
            if (rng() % 3 != 0)
                small.g.add_edge(u, v);
        ExtendedProfile ps = extended_profile(info, small);
        ExtendedProfile pb = extended_profile(info, big);
        CHECK(profile_implies(ps, pb));
        CHECK(profile_implies(ps, ps));
        CHECK(witness_subgraph_check(info, small, big));
        if (!(ps == pb))
            CHECK(!profile_implies(pb, ps));
    }

    BoundariedGraph a = test::random_boundaried(rng, 5, 2, 0.5);
    BoundariedGraph mismatched = test::random_boundaried(rng, 5, 1, 0.5);
    CHECK_THROWS_AS(witness_subgraph_check(info, a, mismatched),
                    ContractViolationError);
}

TEST_CASE("profile cache memoizes by host encoding") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(3), caps);
    ProfileCache cache(info);
    std::mt19937 rng(604);
    BoundariedGraph bg = test::random_boundaried(rng, 6, 2, 0.4);
    SmallGraph sg = to_small(bg);
    const ExtendedProfile& p1 = cache.get(sg);
    const ExtendedProfile& p2 = cache.get(sg);
    CHECK(&p1 == &p2);
    CHECK(cache.size() == 1);
    CHECK(p1 == extended_profile(info, sg));
    SmallGraph other = sg;
    other.add_vertex();
    cache.get(other);
    CHECK(cache.size() == 2);
}

TEST_CASE("profile tabulation rejects oversized boundaries") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(2), caps);
    SmallGraph wide;
    for (int i = 0; i < 17; ++i)
        wide.add_vertex(i + 1);
    CHECK_THROWS_AS(extended_profile(info, wide), ResourceLimitError);
}
