#include <doctest.h>

#include "brute.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/cover.hpp"
#include "kdelete/error.hpp"

using namespace kdelete;

namespace {

void check_disjoint_in_neighborhoods(const Graph& g, const CoverSelection& c) {
    VertexSet seen(g.n());
    REQUIRE(c.disjoint_sets.size() >= c.centers.size());
    for (std::size_t i = 0; i < c.centers.size(); ++i) {
        CHECK(c.disjoint_sets[i].is_subset_of(g.neighbors(c.centers[i])));
        CHECK_FALSE(seen.intersects(c.disjoint_sets[i]));
        seen |= c.disjoint_sets[i];
    }
    CHECK(c.uncovered_edges == g.m() - edges_within(g, c.covered()));
}

} // namespace

TEST_CASE("greedy cover examples") {
    const auto c5 = select_cover_greedy(cycle_graph(5), 2);
    CHECK(c5.uncovered_edges == 2);
    const auto k4 = select_cover_greedy(complete_graph(4), 1);
    CHECK(k4.uncovered_edges == 3);
    const auto k5 = select_cover_greedy(complete_graph(5), 1);
    CHECK(k5.uncovered_edges == 4);
    check_disjoint_in_neighborhoods(cycle_graph(5), c5);
}

TEST_CASE("exact u matches tuples") {
    CHECK(exact_u(cycle_graph(5), 2) == 3);
    CHECK(exact_u(complete_multipartite({3, 3}), 2) == 9);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = random_graph(7, 0.4, seed);
        for (std::size_t k = 1; k <= 3; ++k) CHECK(exact_u(g, k) == brute::u(g, k));
    }
    CHECK_THROWS_AS(exact_u(random_graph(200, 0.1, 1), 4), CapabilityError);
}

TEST_CASE("cover bound value") {
    CHECK(cover_bound(10, 2) == Rational(100) / (2 * e_lower()));
}

TEST_CASE("selections respect n^2/(ek) on triangle-free graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_bipartite(15, 15, 0.5, seed);
        for (std::size_t k = 1; k <= 6; ++k) {
            const Rational bound = cover_bound(g.n(), k);
            const auto der = select_cover_derandomized(g, k);
            const auto cert = select_cover_certified(g, k);
            const auto rnd = select_cover_random(g, k, 64, seed);
            CHECK(Rational(der.uncovered_edges) <= bound);
            CHECK(Rational(cert.uncovered_edges) <= bound);
            check_disjoint_in_neighborhoods(g, der);
            check_disjoint_in_neighborhoods(g, cert);
            check_disjoint_in_neighborhoods(g, rnd);
        }
    }
}

TEST_CASE("disjointify keeps first claims") {
    const Graph g = complete_multipartite({2, 2});
    const std::vector<Vertex> centers{0, 1};
    const auto c = disjointify(g, centers);
    CHECK(c.disjoint_sets[0].members() == std::vector<Vertex>{2, 3});
    CHECK(c.disjoint_sets[1].empty());
}

TEST_CASE("even parts") {
    const Graph g = blow_up(cycle_graph(5), 6);
    for (std::size_t t : {1u, 2u, 3u, 5u}) {
        const auto c = even_parts(g, t, CoverStrategy::Greedy, 0);
        CHECK(c.disjoint_sets.size() == 2 * t);
        VertexSet seen(g.n());
        for (const auto& s : c.disjoint_sets) {
            CHECK(s.count() <= g.n() / t);
            CHECK_FALSE(seen.intersects(s));
            seen |= s;
            CHECK(is_independent(g, s));
        }
    }
}
