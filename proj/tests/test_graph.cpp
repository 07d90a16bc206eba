#include "subhit/errors.hpp"
#include "subhit/graph.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace subhit;

TEST_CASE("graph edges are deduplicated and kept sorted") {
    Graph g(4);
    g.add_edge(2, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 3);
    CHECK(g.m() == 2);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.degree(1) == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), ContractViolationError);
    CHECK_THROWS_AS(g.add_edge(0, 4), ContractViolationError);
}

TEST_CASE("components are sorted and ordered by smallest vertex") {
    Graph g(6);
    g.add_edge(4, 5);
    g.add_edge(0, 2);
    auto comps = g.components();
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{0, 2});
    CHECK(comps[1] == std::vector<int>{1});
    CHECK(comps[2] == std::vector<int>{3});
    CHECK(comps[3] == std::vector<int>{4, 5});
    CHECK(!g.connected());
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    CHECK(g.connected());
}

TEST_CASE("induced subgraph renumbers ascending") {
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 3);
    g.add_edge(3, 4);
    std::vector<int> back;
    Graph sub = g.induced({4, 1, 3}, &back);
    CHECK(back == std::vector<int>{1, 3, 4});
    CHECK(sub.n() == 3);
    CHECK(sub.m() == 2);
    CHECK(sub.has_edge(0, 1));
    CHECK(sub.has_edge(1, 2));
    CHECK(!sub.has_edge(0, 2));
}

TEST_CASE("boundaried graph labels") {
    BoundariedGraph bg;
    bg.g = Graph(4);
    bg.g.add_edge(0, 1);
    bg.boundary = {1, 3};
    bg.labels = {2, 1};
    bg.check();
    CHECK(bg.label_of(1) == 2);
    CHECK(bg.label_of(0) == 0);
    CHECK(bg.vertex_with_label(1) == 3);
    CHECK(bg.vertex_with_label(3) == -1);

    BoundariedGraph bad = bg;
    bad.labels = {1, 1};
    CHECK_THROWS_AS(bad.check(), ContractViolationError);
}

TEST_CASE("colored graph check validates the color range") {
    ColoredGraph cg;
    cg.g = Graph(3);
    cg.color = {0, 2, 1};
    cg.check(3);
    CHECK_THROWS_AS(cg.check(2), ContractViolationError);
    cg.color = {0, 1};
    CHECK_THROWS_AS(cg.check(3), ContractViolationError);
}

TEST_CASE("small graph encode keys on structure, labels and colors only") {
    SmallGraph a;
    a.add_vertex(1, -1, 7);
    a.add_vertex(0, -1, -1);
    a.add_edge(0, 1);
    SmallGraph b = a;
    b.orig[0] = 3;
    CHECK(a.encode() == b.encode());
    SmallGraph c = a;
    c.label[1] = 2;
    CHECK(a.encode() != c.encode());
    SmallGraph d = a;
    d.color[0] = 0;
    CHECK(a.encode() != d.encode());
    SmallGraph e = a;
    e.adj[0] = 0;
    e.adj[1] = 0;
    CHECK(a.encode() != e.encode());
}

TEST_CASE("small graph sub keeps metadata") {
    SmallGraph g;
    g.add_vertex(1, 0, 5);
    g.add_vertex(0, 1, 6);
    g.add_vertex(2, 2, 7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    SmallGraph s = g.sub((1ull << 0) | (1ull << 2));
    CHECK(s.n == 2);
    CHECK(s.label == std::vector<int>{1, 2});
    CHECK(s.color == std::vector<int>{0, 2});
    CHECK(s.orig == std::vector<int>{5, 7});
    CHECK(!s.has_edge(0, 1));
}

namespace {

BoundariedGraph labeled_edge(int l1, int l2) {
    BoundariedGraph bg;
    bg.g = Graph(2);
    bg.g.add_edge(0, 1);
    bg.boundary = {0, 1};
    bg.labels = {l1, l2};
    return bg;
}

} // namespace

TEST_CASE("glue identifies equal labels") {
    BoundariedGraph ab = labeled_edge(1, 2);
    BoundariedGraph bc = labeled_edge(2, 3);
    BoundariedGraph path = glue(ab, bc);
    CHECK(path.g.n() == 3);
    CHECK(path.g.m() == 2);
    // Vertex 1 carries label 2 in both parts and is the middle.
    CHECK(path.g.degree(1) == 2);
    CHECK(path.label_of(1) == 2);
    path.check();

    // No shared labels: plain disjoint union.
    BoundariedGraph disj = glue(labeled_edge(1, 2), labeled_edge(3, 4));
    CHECK(disj.g.n() == 4);
    CHECK(disj.g.m() == 2);
    CHECK(disj.boundary.size() == 4);
}

TEST_CASE("glue is associative on small graph encodings") {
    SmallGraph x, y, z;
    x.add_vertex(1);
    x.add_vertex(0);
    x.add_edge(0, 1);
    y.add_vertex(1);
    y.add_vertex(2);
    y.add_edge(0, 1);
    z.add_vertex(2);
    z.add_vertex(0);
    z.add_edge(0, 1);
    SmallGraph left = glue(glue(x, y), z);
    SmallGraph right = glue(x, glue(y, z));
    CHECK(left.encode() == right.encode());
    CHECK(left.n == 4);
    // Labels 1 and 2 identified once each.
    CHECK(popcount64(left.boundary_mask()) == 2);
}

TEST_CASE("small graph round trip and the vertex cap") {
    BoundariedGraph bg = labeled_edge(2, 5);
    bg.g.add_vertex();
    bg.g.add_edge(1, 2);
    SmallGraph sg = to_small(bg);
    CHECK(sg.n == 3);
    BoundariedGraph back = from_small(sg);
    CHECK(back.g == bg.g);
    CHECK(back.boundary == bg.boundary);
    CHECK(back.labels == bg.labels);

    SmallGraph big;
    for (int i = 0; i < 64; ++i)
        big.add_vertex();
    CHECK_THROWS_AS(big.add_vertex(), ResourceLimitError);
}
