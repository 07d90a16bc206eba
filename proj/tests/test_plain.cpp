#include "subhit/errors.hpp"
#include "subhit/oracle.hpp"
#include "subhit/pattern.hpp"
#include "subhit/plain_solver.hpp"
#include "subhit/treedecomp.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace subhit;

namespace {

void check_plain(const Graph& g, const PatternInfo& info, const SolveResult& res) {
    int expect = test::hitting_optimum_brute(info.h, g, nullptr);
    CHECK(res.optimum == expect);
    CHECK(static_cast<int>(res.hitting_set.size()) == res.optimum);
    std::vector<char> deleted(g.n(), 0);
    for (int v : res.hitting_set) {
        REQUIRE(v >= 0);
        REQUIRE(v < g.n());
        deleted[v] = 1;
    }
    CHECK(test::count_embeddings_brute(info.h, g, nullptr, &deleted) == 0);
}

} // namespace

TEST_CASE("witness dp matches brute force on random hosts") {
    Caps caps;
    std::mt19937 rng(1101);
    for (const Graph& h : {make_path(3), make_path(4), make_cycle(4), make_paw()}) {
        PatternInfo info = analyze_pattern(h, caps);
        for (int it = 0; it < 6; ++it) {
            Graph g = test::random_graph(rng, 7, 0.35);
            NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
            SolveResult res = solve_plain(g, nd, info, caps);
            CHECK(res.stats.method == "witness-dp");
            check_plain(g, info, res);
        }
    }
}

TEST_CASE("witness dp handles disconnected non-clique patterns") {
    Caps caps;
    Graph h(5); // P_3 plus K_2
    h.add_edge(0, 1);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    PatternInfo info = analyze_pattern(h, caps);
    std::mt19937 rng(1102);
    for (int it = 0; it < 5; ++it) {
        Graph g = test::random_graph(rng, 7, 0.5);
        NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
        check_plain(g, info, solve_plain(g, nd, info, caps));
    }
}

TEST_CASE("clique bag dp matches the vertex deletion brute force") {
    Caps caps;
    std::mt19937 rng(1103);
    for (int k : {2, 3, 4}) {
        PatternInfo info = analyze_pattern(make_clique(k), caps);
        for (int it = 0; it < 10; ++it) {
            Graph g = test::random_graph(rng, 8, 0.6);
            NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
            SolveResult res = solve_plain_clique(g, nd, info);
            CHECK(res.stats.method == "plain-clique-dp");
            check_plain(g, info, res);
        }
    }
}

TEST_CASE("disconnected unions of cliques are rejected") {
    Caps caps;
    Graph h(5); // K_3 plus K_2
    h.add_edge(0, 1);
    h.add_edge(0, 2);
    h.add_edge(1, 2);
    h.add_edge(3, 4);
    PatternInfo info = analyze_pattern(h, caps);
    Graph g = make_clique(6);
    NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
    CHECK_THROWS_AS(solve_plain(g, nd, info, caps), UnsupportedPatternError);
}

TEST_CASE("long path hosts exercise witness compaction") {
    Caps caps;
    PatternInfo info = analyze_pattern(make_path(4), caps);
    Graph g = make_path(40);
    NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
    SolveResult res = solve_plain(g, nd, info, caps);
    // A path on 40 vertices has 37 P_4 occurrences; deleting every fourth
    // vertex is optimal.
    CHECK(res.optimum == 10);
    std::vector<char> deleted(g.n(), 0);
    for (int v : res.hitting_set)
        deleted[v] = 1;
    CHECK(test::count_embeddings_brute(info.h, g, nullptr, &deleted) == 0);

    // Stars have no P_4 at all.
    Graph star(9);
    for (int i = 1; i < 9; ++i)
        star.add_edge(0, i);
    NiceDecomposition snd = make_nice(star, heuristic_decompose(star));
    CHECK(solve_plain(star, snd, info, caps).optimum == 0);
}

TEST_CASE("plain solver respects the state cap") {
    Caps tiny;
    tiny.state_limit = 3;
    PatternInfo info = analyze_pattern(make_path(4), tiny);
    std::mt19937 rng(1104);
    Graph g = test::random_graph(rng, 8, 0.5);
    NiceDecomposition nd = make_nice(g, heuristic_decompose(g));
    CHECK_THROWS_AS(solve_plain(g, nd, info, tiny), ResourceLimitError);
}
