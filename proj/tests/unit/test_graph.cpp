#include <doctest.h>

#include <sstream>

#include "brute.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/error.hpp"
#include "kdelete/graph.hpp"

using namespace kdelete;

namespace {
std::vector<Vertex> members(const VertexSet& s) { return s.members(); }
using V = std::vector<Vertex>;
} // namespace

TEST_CASE("build_graph examples") {
    const Graph c5(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.m() == 5);
    const Graph k4 = complete_graph(4);
    for (Vertex v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
    const Graph dedup(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {0, 1}, {1, 2}});
    CHECK(dedup.m() == 2);
    const Graph flipped(3, std::vector<std::pair<Vertex, Vertex>>{{1, 0}, {0, 1}});
    CHECK(flipped.m() == 1);
}

TEST_CASE("build_graph rejects bad pairs") {
    CHECK_THROWS_WITH_AS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{0, 3}}), doctest::Contains("(0, 3)"),
                         std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, std::vector<std::pair<Vertex, Vertex>>{{1, 1}}), std::invalid_argument);
}

TEST_CASE("degree invariants") {
    const Graph g = random_graph(40, 0.3, 5);
    std::size_t total = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        total += g.degree(v);
        CHECK(g.neighbors(v).count() == g.degree(v));
        for (Vertex w : g.neighbor_list(v)) CHECK(g.has_edge(w, v));
    }
    CHECK(total == 2 * g.m());
}

TEST_CASE("bfs_layers examples") {
    auto layers = bfs_layers(cycle_graph(5), 0, 2);
    REQUIRE(layers.size() == 3);
    CHECK(members(layers[0]) == V{0});
    CHECK(members(layers[1]) == V{1, 4});
    CHECK(members(layers[2]) == V{2, 3});
    layers = bfs_layers(complete_graph(4), 0, 2);
    CHECK(members(layers[1]) == V{1, 2, 3});
    CHECK(layers[2].empty());
    layers = bfs_layers(petersen_graph(), 0, 2);
    CHECK(layers[0].count() == 1);
    CHECK(layers[1].count() == 3);
    CHECK(layers[2].count() == 6);
}

TEST_CASE("bfs layers partition the component") {
    const Graph g = disjoint_union(cycle_graph(6), path_graph(3));
    VertexSet all(g.n());
    std::size_t total = 0;
    for (const auto& layer : bfs_layers(g, 0, g.n())) {
        CHECK_FALSE(all.intersects(layer));
        all |= layer;
        total += layer.count();
    }
    CHECK(total == 6);
}

TEST_CASE("degree sums and e(S,T)") {
    const Graph c5 = cycle_graph(5);
    CHECK(degree_sum(c5, c5.all_vertices()) == 10);
    CHECK(degree_sum(c5, VertexSet(5, {0, 1})) == 4);
    CHECK(degree_sum(c5, c5.empty_set()) == 0);
    CHECK(edges_between(c5, VertexSet(5, {0, 1}), VertexSet(5, {0, 1})) == 2);
    const Graph k4 = complete_graph(4);
    CHECK(edges_between(k4, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
    const Graph k22 = complete_multipartite({2, 2});
    CHECK(edges_between(k22, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) == 4);
    const Graph g = random_graph(30, 0.4, 2);
    const VertexSet s(30, {1, 4, 9, 16, 25});
    CHECK(degree_sum(g, s) == edges_between(g, s, g.all_vertices()));
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(cycle_graph(7)) == 7u);
    CHECK_FALSE(odd_girth(complete_multipartite({3, 3})).has_value());
    CHECK(odd_girth(petersen_graph()) == 5u);
    CHECK(odd_girth(complete_graph(4)) == 3u);
    CHECK(odd_girth(blow_up(cycle_graph(7), 3)) == 7u);
}

TEST_CASE("odd girth infinite iff two-colorable") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = random_graph(9, 0.25, seed);
        CHECK(odd_girth(g).has_value() == !two_coloring(g).has_value());
        CHECK(two_coloring(g).has_value() == brute::colorable(g, 2));
    }
}

TEST_CASE("contains_clique") {
    CHECK(contains_clique(complete_graph(4), 4));
    CHECK_FALSE(contains_clique(cycle_graph(5), 3));
    CHECK_FALSE(contains_clique(petersen_graph(), 3));
    CHECK_THROWS_AS(contains_clique(complete_graph(4), 13), CapabilityError);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(9, 0.5, seed);
        const std::size_t omega = brute::clique_number(g);
        CHECK(contains_clique(g, omega));
        CHECK_FALSE(contains_clique(g, omega + 1));
    }
}

TEST_CASE("find_cycle_of_length examples") {
    const auto c = find_cycle_of_length(cycle_graph(5), 5);
    REQUIRE(c);
    CHECK(c->size() == 5);
    CHECK_FALSE(find_cycle_of_length(cycle_graph(5), 3));
    const auto t = find_cycle_of_length(complete_graph(4), 3);
    REQUIRE(t);
    CHECK(*t == V{0, 1, 2});
    CHECK_THROWS_AS(find_cycle_of_length(complete_graph(4), 16), CapabilityError);
}

TEST_CASE("Petersen cycle census") {
    const Graph p = petersen_graph();
    for (std::size_t len = 3; len <= 10; ++len) {
        const bool expected = len == 5 || len == 6 || len == 8 || len == 9;
        CHECK_MESSAGE(find_cycle_of_length(p, len).has_value() == expected, "length " << len);
    }
}

TEST_CASE("find_cycle agrees with exhaustive enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_graph(8 + seed % 3, 0.2 + 0.005 * static_cast<double>(seed), seed);
        for (std::size_t len = 3; len <= g.n(); ++len) {
            const auto c = find_cycle_of_length(g, len);
            CHECK(c.has_value() == brute::has_cycle(g, len));
            if (!c) continue;
            REQUIRE(c->size() == len);
            std::vector<Vertex> sorted = *c;
            std::sort(sorted.begin(), sorted.end());
            CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
            for (std::size_t i = 0; i < len; ++i) CHECK(g.has_edge((*c)[i], (*c)[(i + 1) % len]));
        }
    }
}

TEST_CASE("induced and without_edges") {
    const Graph g = cycle_graph(6);
    auto [sub, map] = g.induced(VertexSet(6, {0, 1, 2, 4}));
    CHECK(sub.n() == 4);
    CHECK(sub.m() == 2);
    CHECK(map == V{0, 1, 2, 4});
    const Edge e{0, 1};
    const Graph h = g.without_edges(std::span<const Edge>(&e, 1));
    CHECK(h.m() == 5);
    CHECK_FALSE(h.has_edge(0, 1));
}

TEST_CASE("edge list round trip and errors") {
    std::istringstream in("# comment\n5 5\n0 1\n1 2\n\n2 3\n3 4\n4 0\n");
    const Graph g = read_edge_list(in);
    CHECK(g.m() == 5);
    std::ostringstream out;
    write_edge_list(out, g);
    CHECK(out.str() == "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
    std::istringstream short_input("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_input), std::invalid_argument);
    std::istringstream bad("3 1\n0 5\n");
    CHECK_THROWS_WITH_AS(read_edge_list(bad), doctest::Contains("line 2"), std::invalid_argument);
}
