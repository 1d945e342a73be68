#include <doctest.h>

#include "brute.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/partition.hpp"

using namespace kdelete;

TEST_CASE("internal edge count") {
    const Graph c5 = cycle_graph(5);
    const VertexPartition p(c5, 2, {0, 1, 0, 1, 0});
    CHECK(p.internal_edges() == 1);
    CHECK(p.recount(c5) == 1);
    CHECK(p.blocks()[0].members() == std::vector<Vertex>{0, 2, 4});
    CHECK_THROWS_AS(VertexPartition(c5, 2, {0, 1, 2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(VertexPartition(c5, 2, {0, 1}), std::invalid_argument);
}

TEST_CASE("greedy completion respects its bound") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(30, 0.3, seed);
        std::vector<VertexSet> seeds{VertexSet(30, {0, 1}), VertexSet(30, {2}), VertexSet(30, {3, 4, 5})};
        const VertexPartition p = greedy_complete(g, seeds);
        std::vector<bool> in(30, false);
        std::uint64_t inside_seeds = 0;
        VertexSet un(30);
        for (const auto& s : seeds) {
            un |= s;
            inside_seeds += edges_within(g, s);
        }
        for (Vertex v : un) in[v] = true;
        const std::uint64_t added = p.internal_edges() - inside_seeds;
        CHECK(added * 3 <= g.m() - brute::edges_inside(g, in));
        for (std::size_t i = 0; i < seeds.size(); ++i)
            for (Vertex v : seeds[i]) CHECK(p.label(v) == i);
    }
}

TEST_CASE("greedy completion rejects bad seeds") {
    const Graph g = cycle_graph(4);
    std::vector<VertexSet> overlap{VertexSet(4, {0, 1}), VertexSet(4, {1})};
    CHECK_THROWS_AS(greedy_complete(g, overlap), std::invalid_argument);
    CHECK_THROWS_AS(greedy_complete(g, std::span<const VertexSet>{}), std::invalid_argument);
}

TEST_CASE("empty-seed greedy caps at m/k") {
    const Graph k5 = complete_graph(5);
    std::vector<VertexSet> seeds(2, VertexSet(5));
    CHECK(greedy_complete(k5, seeds).internal_edges() == brute::h(k5, 2));
}

TEST_CASE("random partition never exceeds m/k") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(25, 0.5, seed);
        for (std::size_t k = 1; k <= 5; ++k) CHECK(random_partition(g, k, 4, seed).internal_edges() * k <= g.m());
    }
}

TEST_CASE("distinct partition") {
    const Graph k4 = complete_graph(4);
    CHECK(distinct_partition(k4, 6).internal_edges() == 0);
    CHECK_THROWS(distinct_partition(k4, 3));
}

TEST_CASE("compose refines outer sets") {
    const Graph g = complete_multipartite({2, 2, 2});
    CHECK(g.m() == 12);
    const std::vector<VertexSet> outer{VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})};
    std::vector<VertexPartition> inner;
    for (const auto& s : outer) {
        auto [sub, map] = g.induced(s);
        inner.push_back(distinct_partition(sub, 3));
    }
    const VertexPartition p = compose_partition(g, outer, inner);
    CHECK(p.k() == 6);
    CHECK(p.internal_edges() == 0);
    CHECK(p.label(0) == 0);
    CHECK(p.label(4) == 4);
}
