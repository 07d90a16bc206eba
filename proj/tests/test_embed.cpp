#include "subhit/embed.hpp"
#include "subhit/errors.hpp"
#include "subhit/pattern.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace subhit;

namespace {

long long count_graph_host(const Piece& p, const Graph& host,
                           const std::vector<int>* color) {
    long long cnt = 0;
    enumerate_embeddings(p, host, color, nullptr,
                         [&](const std::vector<int>&) {
                             ++cnt;
                             return true;
                         });
    return cnt;
}

} // namespace

TEST_CASE("embedding counts match the brute-force reference") {
    std::mt19937 rng(411);
    std::vector<Graph> patterns = {make_path(3), make_path(4), make_cycle(4),
                                   make_clique(3), make_paw()};
    for (int seed = 0; seed < 25; ++seed) {
        Graph host = test::random_graph(rng, 7, 0.4);
        for (const Graph& h : patterns) {
            Piece p = piece_from_pattern(h, false);
            CHECK(count_graph_host(p, host, nullptr) ==
                  test::count_embeddings_brute(h, host, nullptr));
        }
    }
}

TEST_CASE("colored embeddings respect the coloring") {
    std::mt19937 rng(412);
    std::vector<Graph> patterns = {make_path(3), make_cycle(4), make_clique(3)};
    for (int seed = 0; seed < 25; ++seed) {
        Graph host = test::random_graph(rng, 8, 0.5);
        for (const Graph& h : patterns) {
            std::vector<int> color = test::random_coloring(rng, host.n(), h.n());
            Piece p = piece_from_pattern(h, true);
            CHECK(count_graph_host(p, host, &color) ==
                  test::count_embeddings_brute(h, host, &color));
        }
    }
}

TEST_CASE("small host embeddings honor forbidden masks and labels") {
    // Host: triangle with vertex 2 labeled 1.
    SmallGraph host;
    host.add_vertex(0);
    host.add_vertex(0);
    host.add_vertex(1);
    host.add_edge(0, 1);
    host.add_edge(1, 2);
    host.add_edge(0, 2);

    Piece p2;
    p2.add_vertex(0);
    p2.add_vertex(1);
    p2.add_edge(0, 1);

    long long all = 0;
    enumerate_embeddings(p2, host, 0, [&](const std::vector<int>&) {
        ++all;
        return true;
    });
    CHECK(all == 6);

    long long without2 = 0;
    enumerate_embeddings(p2, host, 1ull << 2, [&](const std::vector<int>&) {
        ++without2;
        return true;
    });
    CHECK(without2 == 2);

    // Pinning a piece vertex to the label-1 host vertex.
    Piece pinned;
    pinned.add_vertex(0, 1);
    pinned.add_vertex(1);
    pinned.add_edge(0, 1);
    std::vector<int> image;
    REQUIRE(find_embedding(pinned, host, 0, &image));
    CHECK(image[0] == 2);
    long long pinned_count = 0;
    enumerate_embeddings(pinned, host, 0, [&](const std::vector<int>& img) {
        CHECK(img[0] == 2);
        ++pinned_count;
        return true;
    });
    CHECK(pinned_count == 2);

    // Any-boundary requirement.
    Piece any;
    any.add_vertex(0, -1);
    long long any_count = 0;
    enumerate_embeddings(any, host, 0, [&](const std::vector<int>& img) {
        CHECK(img[0] == 2);
        ++any_count;
        return true;
    });
    CHECK(any_count == 1);
}

TEST_CASE("early stop and color contract") {
    SmallGraph host;
    host.add_vertex();
    host.add_vertex();
    host.add_edge(0, 1);
    Piece p;
    p.add_vertex(0);
    p.add_vertex(1);
    p.add_edge(0, 1);
    long long seen = 0;
    enumerate_embeddings(p, host, 0, [&](const std::vector<int>&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);

    Piece colored = piece_from_pattern(make_path(2), true);
    CHECK_THROWS_AS(find_embedding(colored, host, 0, nullptr),
                    ContractViolationError);
}

TEST_CASE("find_embedding agrees with enumeration") {
    std::mt19937 rng(413);
    Graph h = make_cycle(5);
    Piece p = piece_from_pattern(h, false);
    for (int seed = 0; seed < 30; ++seed) {
        Graph host = test::random_graph(rng, 8, 0.35);
        bool found = find_embedding(p, host, nullptr, nullptr, nullptr);
        CHECK(found == (test::count_embeddings_brute(h, host, nullptr) > 0));
    }
}
