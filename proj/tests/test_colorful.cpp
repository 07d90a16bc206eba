#include "subhit/colorful_solver.hpp"
#include "subhit/errors.hpp"
#include "subhit/oracle.hpp"
#include "subhit/pattern.hpp"
#include "subhit/treedecomp.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace subhit;

namespace {

ColoredGraph random_instance(std::mt19937& rng, int n, double p, int pattern_n) {
    ColoredGraph g;
    g.g = test::random_graph(rng, n, p);
    g.color = test::random_coloring(rng, n, pattern_n);
    return g;
}

void check_solution(const ColoredGraph& g, const PatternInfo& info,
                    const SolveResult& res, const Caps& caps) {
    int expect = test::hitting_optimum_brute(info.h, g.g, &g.color);
    CHECK(res.optimum == expect);
    CHECK(static_cast<int>(res.hitting_set.size()) == res.optimum);
    CHECK(std::is_sorted(res.hitting_set.begin(), res.hitting_set.end()));
    std::vector<char> deleted(g.g.n(), 0);
    for (int v : res.hitting_set) {
        REQUIRE(v >= 0);
        REQUIRE(v < g.g.n());
        deleted[v] = 1;
    }
    CHECK(test::count_embeddings_brute(info.h, g.g, &g.color, &deleted) == 0);
    (void)caps;
}

} // namespace

TEST_CASE("path cut solver is exact for path patterns") {
    Caps caps;
    std::mt19937 rng(1001);
    for (int k : {1, 2, 3, 4, 5}) {
        PatternInfo info = analyze_pattern(make_path(k), caps);
        for (int it = 0; it < 15; ++it) {
            ColoredGraph g = random_instance(rng, 9, 0.4, k);
            SolveResult res = solve_path(g, info);
            CHECK(res.stats.method == "path-cut");
            check_solution(g, info, res, caps);
        }
    }
}

TEST_CASE("bag subset solver is exact for clique patterns") {
    Caps caps;
    std::mt19937 rng(1002);
    for (int k : {2, 3, 4}) {
        PatternInfo info = analyze_pattern(make_clique(k), caps);
        for (int it = 0; it < 12; ++it) {
            ColoredGraph g = random_instance(rng, 8, 0.55, k);
            NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
            SolveResult res = solve_clique(g, nd, info);
            CHECK(res.stats.method == "clique-dp");
            check_solution(g, info, res, caps);
        }
    }
}

TEST_CASE("chunk dp solves general connected patterns") {
    Caps caps;
    std::mt19937 rng(1003);
    for (const Graph& h : {make_paw(), make_cycle(4), make_biclique(2, 3)}) {
        PatternInfo info = analyze_pattern(h, caps);
        for (int it = 0; it < 8; ++it) {
            ColoredGraph g = random_instance(rng, 8, 0.5, h.n());
            NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
            SolveResult res = solve_general(g, nd, info, caps);
            CHECK(res.stats.method == "chunk-dp");
            CHECK(res.stats.peak_states <= res.stats.total_states);
            check_solution(g, info, res, caps);
        }
    }
}

TEST_CASE("chunk dp agrees with the specialized solvers") {
    Caps caps;
    std::mt19937 rng(1004);
    PatternInfo path = analyze_pattern(make_path(4), caps);
    PatternInfo clique = analyze_pattern(make_clique(3), caps);
    for (int it = 0; it < 8; ++it) {
        ColoredGraph g = random_instance(rng, 8, 0.45, 4);
        NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
        CHECK(solve_general(g, nd, path, caps).optimum ==
              solve_path(g, path).optimum);
        ColoredGraph gc = random_instance(rng, 8, 0.55, 3);
        NiceDecomposition ndc = make_nice(gc.g, heuristic_decompose(gc.g));
        CHECK(solve_general(gc, ndc, clique, caps).optimum ==
              solve_clique(gc, ndc, clique).optimum);
    }
}

TEST_CASE("component split covers the host color classes") {
    Caps caps;
    Graph h(5); // P_3 plus K_2
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    PatternInfo info = analyze_pattern(h, caps);
    std::mt19937 rng(1005);
    ColoredGraph g = random_instance(rng, 10, 0.4, 5);
    auto insts = split_components(g, info);
    REQUIRE(insts.size() == 2);
    for (const auto& inst : insts) {
        inst.g.check(inst.pattern.n());
        REQUIRE(inst.host_vertices.size() ==
                static_cast<std::size_t>(inst.g.g.n()));
        for (auto [u, v] : inst.g.g.edges())
            CHECK(g.g.has_edge(inst.host_vertices[u], inst.host_vertices[v]));
        // Instance colors translate back to the original pattern component.
        for (int v = 0; v < inst.g.g.n(); ++v)
            CHECK(inst.g.color[v] >= 0);
    }
    // Color classes partition between the instances.
    CHECK(insts[0].g.g.n() + insts[1].g.g.n() == g.g.n());
}

TEST_CASE("dispatcher handles disconnected patterns via the cheapest region") {
    Caps caps;
    Graph h(5); // P_3 plus K_2
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    PatternInfo info = analyze_pattern(h, caps);
    std::mt19937 rng(1006);
    for (int it = 0; it < 10; ++it) {
        ColoredGraph g = random_instance(rng, 9, 0.45, 5);
        NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
        SolveResult res = solve_colorful(g, nd, info, caps);
        CHECK(res.stats.method.rfind("split", 0) == 0);
        check_solution(g, info, res, caps);
    }

    // Connected patterns route to the cheapest applicable method.
    PatternInfo path = analyze_pattern(make_path(3), caps);
    ColoredGraph g = random_instance(rng, 8, 0.4, 3);
    NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
    CHECK(solve_colorful(g, nd, path, caps).stats.method == "path-cut");
    PatternInfo clique = analyze_pattern(make_clique(3), caps);
    ColoredGraph gc = random_instance(rng, 8, 0.5, 3);
    NiceDecomposition ndc = make_nice(gc.g, heuristic_decompose(gc.g));
    CHECK(solve_colorful(gc, ndc, clique, caps).stats.method == "clique-dp");
    PatternInfo paw = analyze_pattern(make_paw(), caps);
    ColoredGraph gp = random_instance(rng, 8, 0.5, 4);
    NiceDecomposition ndp = make_nice(gp.g, heuristic_decompose(gp.g));
    CHECK(solve_colorful(gp, ndp, paw, caps).stats.method == "chunk-dp");
}

TEST_CASE("empty color regions make the instance trivial") {
    Caps caps;
    Graph h(5); // P_3 plus K_2
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    PatternInfo info = analyze_pattern(h, caps);
    ColoredGraph g;
    g.g = make_path(4);
    g.color = {0, 1, 2, 0}; // colors 3 and 4 unused: no sigma-subgraph exists
    NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
    SolveResult res = solve_colorful(g, nd, info, caps);
    CHECK(res.optimum == 0);
    CHECK(res.stats.method == "split[1]:empty-region");

    // A connected pattern with an absent color stays with its own solver.
    PatternInfo p3 = analyze_pattern(make_path(3), caps);
    ColoredGraph miss;
    miss.g = make_path(3);
    miss.color = {0, 1, 0};
    NiceDecomposition ndm = make_nice(miss.g, heuristic_decompose(miss.g));
    SolveResult rm = solve_colorful(miss, ndm, p3, caps);
    CHECK(rm.optimum == 0);
    CHECK(rm.stats.method == "path-cut");
}

TEST_CASE("state dump is deterministic and the state cap trips") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_cycle(4), caps);
    std::mt19937 rng(1007);
    ColoredGraph g = random_instance(rng, 8, 0.5, 4);
    NiceDecomposition nd = make_nice(g.g, heuristic_decompose(g.g));
    SolveOptions opts;
    opts.dump_states = true;
    SolveResult a = solve_general(g, nd, info, caps, opts);
    SolveResult b = solve_general(g, nd, info, caps, opts);
    CHECK(!a.state_dump.empty());
    CHECK(a.state_dump == b.state_dump);
    CHECK(a.hitting_set == b.hitting_set);

    Caps tiny;
    tiny.state_limit = 4;
    CHECK_THROWS_AS(solve_general(g, nd, info, tiny), ResourceLimitError);
}
