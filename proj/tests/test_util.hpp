#ifndef SUBHIT_TEST_UTIL_HPP
#define SUBHIT_TEST_UTIL_HPP

#include "subhit/graph.hpp"

#include <algorithm>
#include <climits>
#include <random>
#include <vector>

namespace subhit::test {

// Reference embedding counter: every injective map checked directly.
// host_color, when given, demands image color == pattern vertex.
inline long long count_embeddings_brute(const Graph& h, const Graph& host,
                                        const std::vector<int>* host_color,
                                        const std::vector<char>* deleted = nullptr) {
    std::vector<int> img(h.n(), -1);
    std::vector<char> used(host.n(), 0);
    long long cnt = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == h.n()) {
            ++cnt;
            return;
        }
        for (int v = 0; v < host.n(); ++v) {
            if (used[v] || (deleted && (*deleted)[v]))
                continue;
            if (host_color && (*host_color)[v] != i)
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.has_edge(i, j) && !host.has_edge(img[j], v))
                    ok = false;
            if (!ok)
                continue;
            img[i] = v;
            used[v] = 1;
            self(self, i + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    return cnt;
}

inline std::vector<std::vector<int>> occurrence_sets_brute(
    const Graph& h, const Graph& host, const std::vector<int>* host_color) {
    std::vector<int> img(h.n(), -1);
    std::vector<char> used(host.n(), 0);
    std::vector<std::vector<int>> occ;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == h.n()) {
            std::vector<int> set(img);
            std::sort(set.begin(), set.end());
            occ.push_back(std::move(set));
            return;
        }
        for (int v = 0; v < host.n(); ++v) {
            if (used[v])
                continue;
            if (host_color && (*host_color)[v] != i)
                continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (h.has_edge(i, j) && !host.has_edge(img[j], v))
                    ok = false;
            if (!ok)
                continue;
            img[i] = v;
            used[v] = 1;
            self(self, i + 1);
            used[v] = 0;
        }
    };
    rec(rec, 0);
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    return occ;
}

// Exhaustive minimum hitting set; n must stay small.
inline int min_hitting_set_brute(int n, const std::vector<std::vector<int>>& family) {
    if (family.empty())
        return 0;
    int best = INT_MAX;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        int pc = __builtin_popcountll(mask);
        if (pc >= best)
            continue;
        bool all = true;
        for (const auto& set : family) {
            bool hit = false;
            for (int v : set)
                if ((mask >> v) & 1ull) {
                    hit = true;
                    break;
                }
            if (!hit) {
                all = false;
                break;
            }
        }
        if (all)
            best = pc;
    }
    return best;
}

// Reference optimum by direct subset search over the host.
inline int hitting_optimum_brute(const Graph& h, const Graph& host,
                                 const std::vector<int>* host_color) {
    return min_hitting_set_brute(host.n(), occurrence_sets_brute(h, host, host_color));
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::uniform_real_distribution<double> d(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (d(rng) < p)
                g.add_edge(i, j);
    return g;
}

inline std::vector<int> random_coloring(std::mt19937& rng, int n, int pattern_n) {
    std::uniform_int_distribution<int> d(0, pattern_n - 1);
    std::vector<int> color(n);
    for (int& c : color)
        c = d(rng);
    return color;
}

inline BoundariedGraph random_boundaried(std::mt19937& rng, int n, int t, double p) {
    BoundariedGraph bg;
    bg.g = random_graph(rng, n, p);
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i)
        verts[i] = i;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(t);
    std::sort(verts.begin(), verts.end());
    std::vector<int> labels(t);
    for (int i = 0; i < t; ++i)
        labels[i] = i + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    bg.boundary = verts;
    bg.labels = labels;
    return bg;
}

} // namespace subhit::test

#endif
