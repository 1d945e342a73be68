#include <doctest.h>

#include "kdelete/clique_wheel.hpp"
#include "kdelete/constructions.hpp"
#include "kdelete/json_io.hpp"

using namespace kdelete;
using nlohmann::json;

TEST_CASE("rational json") {
    const json j = rational_json(Rational(3, 2));
    CHECK(j.at("exact") == "3/2");
    CHECK(j.at("decimal").get<double>() == doctest::Approx(1.5));
}

TEST_CASE("partition round trip") {
    const Graph c5 = cycle_graph(5);
    const VertexPartition p(c5, 2, {0, 1, 0, 1, 0});
    const json j = to_json(p);
    CHECK(j.at("k") == 2);
    CHECK(j.at("internal_edges") == 1);
    const VertexPartition back = partition_from_json(c5, j);
    CHECK(std::vector<Label>(back.labels().begin(), back.labels().end()) ==
          std::vector<Label>(p.labels().begin(), p.labels().end()));
    json bad = j;
    bad["internal_edges"] = 3;
    CHECK_THROWS_AS(partition_from_json(c5, bad), std::invalid_argument);
    CHECK_THROWS(partition_from_json(c5, json{{"k", 2}}));
}

TEST_CASE("report json has the bound fields") {
    const BoundReport rep = partition_triangle_free(cycle_graph(5), 2);
    const json j = to_json(rep);
    for (const char* key : {"method", "deleted", "bound", "guarantee_holds", "partition"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j.at("bound").contains("exact"));
    CHECK(j.at("deleted") == rep.deleted);
}

TEST_CASE("other payloads serialize") {
    const Graph p = petersen_graph();
    CHECK(to_json(second_eigenvalue(p)).contains("lambda"));
    CHECK(to_json(select_cover_greedy(p, 2)).contains("centers"));
    CHECK(to_json(scrub_short_odd_cycles(p, 2)).contains("removed_edges"));
}
