#include <doctest.h>

#include "kdelete/constructions.hpp"
#include "kdelete/error.hpp"
#include "kdelete/oddgirth.hpp"

using namespace kdelete;

TEST_CASE("witness on C7") {
    const Graph c7 = cycle_graph(7);
    const auto w = find_poor_expansion_set(c7, c7.all_vertices(), 2);
    CHECK(w.x == doctest::Approx(1.8708).epsilon(1e-4));
    CHECK(is_independent(c7, w.set));
    CHECK_FALSE(w.set.empty());
    VertexSet nb(7);
    for (Vertex v : w.set) nb |= c7.neighbors(v);
    CHECK(w.neighborhood_degree == degree_sum(c7, nb));
    CHECK(static_cast<double>(w.lhs) * (w.x + 1) >= static_cast<double>(w.neighborhood_degree) * (1 - 1e-9));
}

TEST_CASE("witness errors") {
    const Graph g = empty_graph(4);
    try {
        (void)find_poor_expansion_set(g, g.all_vertices(), 1);
        FAIL("expected a throw");
    } catch (const PreconditionViolation& e) {
        CHECK(e.kind() == "EmptyWorkingSet");
    }
}

TEST_CASE("extraction yields heavy independent sets") {
    for (std::size_t r : {1u, 2u}) {
        const Graph g = blow_up(cycle_graph(2 * r + 3), 4);
        const auto ext = extract_independent_set(g, g.all_vertices(), r);
        CHECK(is_independent(g, ext.set));
        CHECK(ext.meets_bound);
        CHECK(ext.degree_sum == degree_sum(g, ext.set));
        CHECK(8 * ext.x * static_cast<double>(ext.degree_sum) >=
              static_cast<double>(ext.input_degree_sum) * (1 - 1e-9));
    }
}

TEST_CASE("odd girth partition meets bound") {
    for (std::size_t r : {1u, 2u}) {
        const Graph g = blow_up(cycle_graph(2 * r + 3), 5);
        for (std::size_t k : {2u, 3u, 5u}) {
            const BoundReport rep = partition_odd_girth(g, r, k, true);
            CHECK(rep.partition.k() == k);
            CHECK(rep.deleted == rep.partition.recount(g));
            CHECK(rep.guarantee_holds);
            CHECK(rep.bound == odd_girth_bound(g.n(), r, k));
            CHECK(rep.trajectory.size() == k + 1);
            CHECK(trajectory_satisfies_recursion(rep.trajectory, r));
        }
    }
}

TEST_CASE("odd girth precondition") {
    try {
        (void)partition_odd_girth(cycle_graph(5), 2, 2, true);
        FAIL("expected a throw");
    } catch (const PreconditionViolation& e) {
        CHECK(e.kind() == "OddGirthTooSmall");
    }
    CHECK_NOTHROW((void)partition_odd_girth(cycle_graph(7), 2, 2, true));
}

TEST_CASE("recursion check") {
    CHECK(trajectory_satisfies_recursion({Rational(1), Rational(7, 8)}, 1));
    CHECK_FALSE(trajectory_satisfies_recursion({Rational(1), Rational(9, 10)}, 1));
}

TEST_CASE("scrubber removes short odd cycles") {
    const Graph g = random_graph(40, 0.15, 3);
    for (std::size_t r : {2u, 3u}) {
        const auto rep = scrub_short_odd_cycles(g, r);
        for (std::size_t len = 3; len < 2 * r + 1; len += 2)
            CHECK_FALSE(find_cycle_of_length(rep.result, len).has_value());
        CHECK(rep.result.m() + rep.removed_edges.size() == g.m());
        std::size_t from_counts = 0;
        for (auto [len, count] : rep.per_length) from_counts += len * count;
        CHECK(from_counts == rep.removed_edges.size());
        CHECK(rep.bound_holds);
    }
}

TEST_CASE("scrubber precondition") {
    try {
        (void)scrub_short_odd_cycles(cycle_graph(5), 2, true);
        FAIL("expected a throw");
    } catch (const PreconditionViolation& e) {
        CHECK(e.kind() == "ForbiddenCyclePresent");
    }
    const auto clean = scrub_short_odd_cycles(cycle_graph(7), 2, true);
    CHECK(clean.removed_edges.empty());
    CHECK(clean.precondition_checked);
}

TEST_CASE("odd-cycle-free partition") {
    Graph g = disjoint_union(blow_up(cycle_graph(7), 4), complete_graph(3));
    const BoundReport rep = partition_odd_cycle_free(g, 2, 4, true);
    CHECK(rep.deleted == rep.partition.recount(g));
    CHECK(rep.accounted_deletions >= rep.deleted);
    CHECK(rep.scrub_removed == 3);
    CHECK(rep.guarantee_holds);
}
