#include <doctest.h>

#include "brute.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/error.hpp"
#include "kdelete/maxcut.hpp"

using namespace kdelete;

TEST_CASE("exact max cut examples") {
    CHECK(max_k_cut_exact(petersen_graph(), 2).crossing == 12);
    CHECK(max_k_cut_exact(complete_graph(4), 3).crossing == 5);
    const Graph two = Graph(6, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
    CHECK(max_k_cut_exact(two, 2).crossing == 5);
    CHECK_THROWS_AS(max_k_cut_exact(empty_graph(17), 2), CapabilityError);
    CHECK_THROWS_AS(max_k_cut_exact(empty_graph(13), 3), CapabilityError);
}

TEST_CASE("exact matches brute force") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(8, 0.45, seed);
        for (std::size_t l : {2u, 3u}) {
            const CutResult c = max_k_cut_exact(g, l);
            CHECK(c.crossing == brute::max_cut(g, l));
            CHECK(c.provenance == Provenance::Exact);
            CHECK(c.crossing + c.partition.recount(g) == g.m());
        }
    }
}

TEST_CASE("cut bookkeeping") {
    const Graph c5 = cycle_graph(5);
    const CutResult c = make_cut(c5, VertexPartition(c5, 2, {0, 1, 0, 1, 0}), Provenance::LocalSearch);
    CHECK(c.crossing == 4);
    CHECK(c.fraction == Rational(4, 5));
    CHECK(c.surplus == Rational(3, 2));
    CHECK(make_cut(empty_graph(3), VertexPartition(empty_graph(3), 2, {0, 0, 0}), Provenance::Exact).fraction == 0);
}

TEST_CASE("local search is a local optimum above (1-1/l) m") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(30, 0.3, seed);
        for (std::size_t l : {2u, 3u}) {
            const CutResult c = local_search_cut(g, l, 4, seed);
            CHECK(c.surplus >= 0);
            CHECK(c.crossing + c.partition.recount(g) == g.m());
        }
    }
    CHECK(local_search_cut(petersen_graph(), 2, 8, 1).crossing <= 12);
}

TEST_CASE("d_l of complete graphs") {
    CHECK(d_l_complete(4, 2) == Rational(2, 3));
    CHECK(d_l_complete(2, 2) == 1);
    CHECK(d_l_complete(3, 3) == 1);
    CHECK(d_l_complete(5, 2) == Rational(6, 10));
    CHECK_THROWS(d_l_complete(2, 3));
}

TEST_CASE("coarsening keeps d_l fraction") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = random_graph(24, 0.4, seed);
        for (std::size_t k : {4u, 6u}) {
            const CutResult fine = local_search_cut(g, k, 2, seed);
            for (std::size_t l : {2u, 3u}) {
                const CutResult coarse = coarsen_cut(g, fine, l, 8, seed);
                CHECK(coarse.l == l);
                CHECK(Rational(coarse.crossing) >= d_l_complete(k, l) * fine.crossing);
            }
        }
    }
}

TEST_CASE("surplus composition") {
    const Graph g = random_graph(20, 0.4, 7);
    const std::vector<VertexSet> blocks{VertexSet(20, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}),
                                        VertexSet(20, {10, 11, 12, 13, 14, 15, 16, 17, 18, 19})};
    std::vector<CutResult> cuts;
    std::uint64_t inner_m = 0, inner_cross = 0;
    for (const auto& b : blocks) {
        auto [sub, map] = g.induced(b);
        cuts.push_back(max_k_cut_exact(sub, 2));
        inner_m += sub.m();
        inner_cross += cuts.back().crossing;
    }
    const CutResult c = surplus_compose(g, blocks, cuts);
    CHECK(Rational(c.crossing) >= Rational(g.m() - inner_m, 2) + inner_cross);
}

TEST_CASE("driver k") {
    CHECK(driver_constant(1) == 48);
    CHECK(driver_constant(2) == 4 * 24 * 24);
    const Graph g = blow_up(cycle_graph(5), 4);
    const std::size_t k = driver_k(g.n(), g.m(), 1);
    CHECK(k == 480);
    CHECK(k % 2 == 0);
    const CutResult c = maxcut_dense_driver(g, 1);
    CHECK(c.diagnostics.clamped);
    CHECK(c.l == 2);
    CHECK(c.crossing == brute::max_cut(cycle_graph(5), 2) * 16);
}

TEST_CASE("driver on a dense odd-cycle-free graph") {
    const Graph g = complete_multipartite({200, 200});
    CHECK(driver_k(g.n(), g.m(), 1) == 384);
    const CutResult c = maxcut_dense_driver(g, 1);
    CHECK_FALSE(c.diagnostics.clamped);
    CHECK(c.provenance == Provenance::Driver);
    CHECK(c.l == 2);
    CHECK(c.crossing + c.partition.recount(g) == g.m());
    CHECK(c.surplus >= 0);
    REQUIRE(c.diagnostics.realized_deletions.has_value());
    if (c.diagnostics.conditional_applies) CHECK(c.diagnostics.conditional_holds);
}

TEST_CASE("odd-cycle-free max cut") {
    const CutResult empty = maxcut_odd_cycle_free(empty_graph(5), 2);
    CHECK(empty.diagnostics.branch == "empty");
    const Graph g = blow_up(cycle_graph(7), 5);
    const CutResult c = maxcut_odd_cycle_free(g, 2);
    CHECK(c.surplus >= 0);
    CHECK(c.diagnostics.surplus_ratio.has_value());
    CHECK(c.crossing <= g.m());
}
