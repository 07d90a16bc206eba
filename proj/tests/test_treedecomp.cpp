#include "subhit/errors.hpp"
#include "subhit/io.hpp"
#include "subhit/pattern.hpp"
#include "subhit/treedecomp.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace subhit;

TEST_CASE("validate accepts a hand decomposition and reports violations") {
    Graph g = make_path(4);
    TreeDecomposition td;
    td.bags = {{0, 1}, {1, 2}, {2, 3}};
    td.tree_edges = {{0, 1}, {1, 2}};
    CHECK(validate(g, td).ok);
    CHECK(td.width() == 1);

    TreeDecomposition missing_edge = td;
    missing_edge.bags[1] = {1};
    ValidationReport r = validate(g, missing_edge);
    CHECK(!r.ok);
    CHECK(!r.violation.empty());

    TreeDecomposition missing_vertex = td;
    missing_vertex.bags[2] = {2};
    CHECK(!validate(g, missing_vertex).ok);

    TreeDecomposition disconnected_occurrence = td;
    disconnected_occurrence.bags[1] = {2};
    disconnected_occurrence.bags[2] = {1, 2, 3};
    CHECK(!validate(g, disconnected_occurrence).ok);

    TreeDecomposition cyclic = td;
    cyclic.tree_edges.push_back({0, 2});
    CHECK(!validate(g, cyclic).ok);

    TreeDecomposition forest = td;
    forest.tree_edges.pop_back();
    CHECK(!validate(g, forest).ok);

    TreeDecomposition out_of_range = td;
    out_of_range.bags[0] = {0, 7};
    CHECK(!validate(g, out_of_range).ok);

    TreeDecomposition empty;
    CHECK(empty.width() == -1);
}

TEST_CASE("heuristic decomposition is valid and tight on known families") {
    CHECK(heuristic_decompose(make_clique(6)).width() == 5);
    CHECK(heuristic_decompose(make_cycle(8)).width() == 2);

    Graph tree(7);
    tree.add_edge(0, 1);
    tree.add_edge(0, 2);
    tree.add_edge(1, 3);
    tree.add_edge(1, 4);
    tree.add_edge(2, 5);
    tree.add_edge(2, 6);
    CHECK(heuristic_decompose(tree).width() == 1);

    Graph empty(0);
    TreeDecomposition td0 = heuristic_decompose(empty);
    CHECK(validate(empty, td0).ok);

    Graph isolated(3);
    TreeDecomposition td1 = heuristic_decompose(isolated);
    CHECK(validate(isolated, td1).ok);
    CHECK(td1.width() <= 0);

    std::mt19937 rng(501);
    for (int it = 0; it < 40; ++it) {
        Graph g = test::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.3);
        TreeDecomposition td = heuristic_decompose(g);
        ValidationReport r = validate(g, td);
        INFO(r.violation);
        CHECK(r.ok);
    }
}

TEST_CASE("nice decompositions satisfy their structural contract") {
    std::mt19937 rng(502);
    for (int it = 0; it < 30; ++it) {
        Graph g = test::random_graph(rng, 1 + static_cast<int>(rng() % 10), 0.35);
        TreeDecomposition td = heuristic_decompose(g);
        NiceDecomposition nd = make_nice(g, td);
        nd.check(g);
        CHECK(nd.t == td.width() + 1);
        CHECK(nd.nodes[nd.root].bag.empty());
        CHECK(static_cast<int>(nd.nodes.size()) <=
              make_nice_factor() * std::max(1, nd.t * g.n()));

        // Every graph vertex is introduced somewhere; lambda is injective on
        // every bag and within the label budget.
        std::vector<char> seen(g.n(), 0);
        for (const NiceNode& node : nd.nodes) {
            if (node.kind == NodeKind::introduce)
                seen[node.vertex] = 1;
            std::vector<int> labels;
            for (int v : node.bag) {
                CHECK(nd.lambda[v] >= 1);
                CHECK(nd.lambda[v] <= nd.t);
                labels.push_back(nd.lambda[v]);
            }
            std::sort(labels.begin(), labels.end());
            CHECK(std::unique(labels.begin(), labels.end()) == labels.end());
        }
        CHECK(std::count(seen.begin(), seen.end(), 0) == 0);

        // Postorder lists children before parents.
        std::vector<int> order = nd.postorder();
        CHECK(order.size() == nd.nodes.size());
        std::vector<int> pos(nd.nodes.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[order[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < nd.nodes.size(); ++i)
            for (int c : nd.nodes[i].children)
                CHECK(pos[c] < pos[static_cast<int>(i)]);

        // Edges of g are realized: both endpoints share some bag.
        for (auto [u, v] : g.edges()) {
            bool found = false;
            for (const NiceNode& node : nd.nodes)
                found = found ||
                        (std::binary_search(node.bag.begin(), node.bag.end(), u) &&
                         std::binary_search(node.bag.begin(), node.bag.end(), v));
            CHECK(found);
        }
    }
}

TEST_CASE("pace graph and decomposition files round trip") {
    Graph g = make_paw();
    std::ostringstream gs;
    write_gr(gs, g);
    std::istringstream gi(gs.str());
    CHECK(read_gr(gi) == g);

    std::istringstream commented(
        "c a comment\np tw 3 2\nc more\n1 2\n2 3\n");
    Graph parsed = read_gr(commented);
    CHECK(parsed.n() == 3);
    CHECK(parsed.has_edge(0, 1));
    CHECK(parsed.has_edge(1, 2));
    CHECK(!parsed.has_edge(0, 2));

    std::istringstream bad_header("p xx\n");
    CHECK_THROWS_AS(read_gr(bad_header), ParseError);
    std::istringstream bad_vertex("p tw 2 1\n1 5\n");
    CHECK_THROWS_AS(read_gr(bad_vertex), ParseError);

    TreeDecomposition td = heuristic_decompose(g);
    std::ostringstream ts;
    write_td(ts, td, g.n());
    std::istringstream ti(ts.str());
    int declared = -1;
    TreeDecomposition back = read_td(ti, &declared);
    CHECK(declared == g.n());
    CHECK(back.bags == td.bags);
    CHECK(validate(g, back).ok);

    std::vector<int> color = {2, 0, 1, 2};
    std::ostringstream cs;
    write_coloring(cs, color);
    std::istringstream ci(cs.str());
    CHECK(read_coloring(ci, 4) == color);

    std::istringstream missing("1 1\n2 1\n3 1\n");
    CHECK_THROWS_AS(read_coloring(missing, 4), ParseError);
    std::istringstream repeated("1 1\n1 2\n");
    CHECK_THROWS_AS(read_coloring(repeated, 2), ParseError);
}
