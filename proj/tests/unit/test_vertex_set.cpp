#include <doctest.h>

#include <stdexcept>

#include "kdelete/vertex_set.hpp"

using kdelete::VertexSet;

TEST_CASE("insert, erase, count across word boundaries") {
    VertexSet s(130);
    for (kdelete::Vertex v : {0u, 63u, 64u, 129u}) s.insert(v);
    CHECK(s.count() == 4);
    CHECK(s.contains(64));
    s.erase(64);
    CHECK_FALSE(s.contains(64));
    CHECK(s.members() == std::vector<kdelete::Vertex>{0, 63, 129});
    CHECK_THROWS_AS(s.insert(130), std::out_of_range);
}

TEST_CASE("set algebra") {
    const VertexSet a(10, {1, 2, 3}), b(10, {3, 4});
    CHECK((a | b).members() == std::vector<kdelete::Vertex>{1, 2, 3, 4});
    CHECK((a & b).members() == std::vector<kdelete::Vertex>{3});
    CHECK((a - b).members() == std::vector<kdelete::Vertex>{1, 2});
    CHECK(a.intersection_count(b) == 1);
    CHECK(VertexSet(10, {3}).is_subset_of(a));
    CHECK(a.complement().count() == 7);
    CHECK(VertexSet::full(70).count() == 70);
    CHECK(VertexSet::full(70).complement().empty());
    CHECK_THROWS_AS((void)(a | VertexSet(11)), std::invalid_argument);
}

TEST_CASE("next walks members in order") {
    const VertexSet s(200, {5, 64, 199});
    CHECK(s.next(0) == 5);
    CHECK(s.next(6) == 64);
    CHECK(s.next(65) == 199);
    CHECK(s.next(200) == 200);
}
