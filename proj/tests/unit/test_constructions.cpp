#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "kdelete/constructions.hpp"

using namespace kdelete;

TEST_CASE("basic families") {
    CHECK(empty_graph(4).m() == 0);
    CHECK(path_graph(5).m() == 4);
    CHECK(cycle_graph(6).m() == 6);
    CHECK(complete_graph(6).m() == 15);
    CHECK(complete_multipartite({2, 2, 2}).m() == 12);
    CHECK(petersen_graph().m() == 15);
    CHECK(petersen_graph().regular_degree() == 3u);
    const Graph w = wheel_graph(5);
    CHECK(w.n() == 6);
    CHECK(w.degree(5) == 5);
    CHECK(w.m() == 10);
}

TEST_CASE("random graphs are reproducible") {
    CHECK(random_graph(30, 0.3, 9).m() == random_graph(30, 0.3, 9).m());
    const Graph b = random_bipartite(5, 7, 0.6, 2);
    CHECK(brute::colorable(b, 2));
    CHECK(random_graph(10, 1.0, 0).m() == 45);
    CHECK(random_graph(10, 0.0, 0).m() == 0);
}

TEST_CASE("blow-up and union") {
    const Graph b = blow_up(cycle_graph(5), 2);
    CHECK(b.n() == 10);
    CHECK(b.m() == 20);
    CHECK(b.has_edge(0, 2));
    CHECK(b.has_edge(1, 3));
    CHECK_FALSE(b.has_edge(0, 1));
    CHECK(brute::h(b, 2) == 4);
    CHECK(brute::h(cycle_graph(7), 2) == 1);
    const Graph u = disjoint_union(complete_graph(3), complete_graph(3));
    CHECK(u.m() == 6);
    CHECK(brute::h(u, 4) == 0);
}

TEST_CASE("generate from json") {
    using nlohmann::json;
    CHECK(generate(json{{"kind", "petersen"}}).m() == 15);
    CHECK(generate(json{{"kind", "cycle"}, {"params", {{"n", 7}}}}).n() == 7);
    const Graph bu = generate(json::parse(R"({"kind":"blow_up","params":{"t":3,"base":{"kind":"cycle","params":{"n":5}}}})"));
    CHECK(bu.n() == 15);
    CHECK(generate(json{{"kind", "random"}, {"params", {{"n", 20}, {"p", 0.5}}}, {"seed", 4}}).m() ==
          random_graph(20, 0.5, 4).m());
    CHECK_THROWS_AS(generate(json{{"kind", "nope"}}), std::invalid_argument);
    CHECK_THROWS_AS(generate(json{{"kind", "cycle"}}), std::invalid_argument);
}

TEST_CASE("second eigenvalue") {
    const auto c5 = second_eigenvalue(cycle_graph(5));
    CHECK(c5.converged);
    CHECK(c5.d == 2u);
    CHECK(c5.mu_min == doctest::Approx(-1.618034).epsilon(1e-6));
    CHECK(c5.lambda == doctest::Approx(1.618034).epsilon(1e-6));
    const auto pet = second_eigenvalue(petersen_graph());
    CHECK(pet.mu2 == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(pet.mu_min == doctest::Approx(-2.0).epsilon(1e-6));
    const auto k4 = second_eigenvalue(complete_graph(4));
    CHECK(k4.lambda == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("expander mixing") {
    const Graph p = petersen_graph();
    const auto prof = second_eigenvalue(p);
    const auto rep = mixing_check(p, prof.lambda + prof.residual, 50, 1, true);
    CHECK(rep.exhaustive);
    CHECK(rep.min_slack >= -1e-9);
    CHECK_THROWS_AS(mixing_check(path_graph(4), 1.0, 5, 0), std::invalid_argument);
}

TEST_CASE("spectral lower bound") {
    const Graph k4 = complete_graph(4);
    const auto cert = spectral_lower_bound(k4, second_eigenvalue(k4), 2);
    CHECK(cert.value <= Rational(brute::h(k4, 2)));
    CHECK(to_double(cert.value) == doctest::Approx(1.0).epsilon(1e-9));
    const Graph p = petersen_graph();
    for (std::size_t k = 2; k <= 4; ++k)
        CHECK(spectral_lower_bound(p, second_eigenvalue(p), k).value <= Rational(brute::h(p, k)));
}
