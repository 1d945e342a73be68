#include <doctest.h>

#include <cstdlib>

#include "brute.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/error.hpp"
#include "kdelete/oracle.hpp"

using namespace kdelete;

TEST_CASE("exact h examples") {
    CHECK(exact_h(petersen_graph(), 2) == 3);
    CHECK(exact_h(cycle_graph(5), 2) == 1);
    CHECK(exact_h(complete_graph(4), 2) == 2);
    CHECK(exact_h(complete_graph(5), 2) == 4);
    CHECK(exact_h(blow_up(cycle_graph(5), 2), 2) == 4);
    CHECK(exact_h(cycle_graph(7), 2) == 1);
    CHECK(exact_h(disjoint_union(complete_graph(3), complete_graph(3)), 4) == 0);
    CHECK(exact_h(complete_graph(4), 9) == 0);
    CHECK(exact_h(empty_graph(6), 1) == 0);
    CHECK(exact_h(complete_graph(6), 1) == 15);
}

TEST_CASE("exact h matches brute force") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Graph g = random_graph(8, 0.5, seed);
        for (std::size_t k = 1; k <= 3; ++k) CHECK(exact_h(g, k) == brute::h(g, k));
    }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(exact_h(random_graph(60, 0.5, 1), 4, OracleBudget{100}), BudgetExceeded);
    ::setenv("KDELETE_BUDGET", "1234", 1);
    CHECK(OracleBudget::from_env().max_states == 1234);
    ::setenv("KDELETE_BUDGET", "junk", 1);
    CHECK(OracleBudget::from_env().max_states == OracleBudget{}.max_states);
    ::unsetenv("KDELETE_BUDGET");
}

TEST_CASE("graph enumeration counts") {
    for (auto [n, expected] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 8}, {4, 64}}) {
        std::size_t count = 0;
        enumerate_graphs(n, [&](const Graph& g) {
            CHECK(g.n() == n);
            ++count;
        });
        CHECK(count == expected);
    }
    CHECK_THROWS_AS(enumerate_graphs(8, [](const Graph&) {}), CapabilityError);
}
