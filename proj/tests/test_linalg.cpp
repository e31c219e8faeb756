#include "doctest.h"
#include "hilb/linalg.hpp"

using namespace hilb;

TEST_CASE("solver inverts a small rational system") {
    RatMatrix a(3, 3);
    a.at(0, 0) = 2;
    a.at(0, 1) = 1;
    a.at(1, 1) = Rat(1, 3);
    a.at(1, 2) = -1;
    a.at(2, 0) = 5;
    a.at(2, 2) = 7;
    RatSolver s(a);
    REQUIRE(!s.singular());
    std::vector<Rat> b = {Rat(1), Rat(0), Rat(2)};
    auto x = s.solve(b);
    auto ax = a.apply(x);
    CHECK(ax == b);
}

TEST_CASE("singular detection and rank") {
    RatMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 2;
    a.at(1, 0) = 2;
    a.at(1, 1) = 4;
    RatSolver s(a);
    CHECK(s.singular());
    CHECK(rank(a) == 1);
    CHECK(determinant(a) == Rat(0));
}

TEST_CASE("span tracker accepts exactly a basis and solves coordinates") {
    SpanTracker t(3);
    std::vector<Rat> v1 = {Rat(1), Rat(1), Rat(0)};
    std::vector<Rat> v2 = {Rat(0), Rat(1), Rat(1)};
    std::vector<Rat> v3 = {Rat(1), Rat(2), Rat(1)};  // = v1 + v2
    CHECK(t.add(v1));
    CHECK(t.add(v2));
    CHECK(!t.add(v3));
    std::vector<Rat> coords;
    REQUIRE(t.coordinates(v3, coords));
    CHECK(coords[0] == Rat(1));
    CHECK(coords[1] == Rat(1));
    std::vector<Rat> outside = {Rat(1), Rat(0), Rat(0)};
    CHECK(!t.coordinates(outside, coords));
}

TEST_CASE("mod-p rank certifies full rank") {
    std::vector<std::vector<std::uint64_t>> rows = {{1, 2, 3}, {0, 1, 5}, {0, 0, 7}};
    CHECK(rank_mod_p(rows, 3) == 3);
    rows.push_back({1, 3, 8});  // dependent
    CHECK(rank_mod_p(rows, 3) == 3);
}

TEST_CASE("matrix inverse round-trips") {
    RatMatrix a(2, 2);
    a.at(0, 0) = Rat(1, 2);
    a.at(0, 1) = 3;
    a.at(1, 0) = -1;
    a.at(1, 1) = Rat(5, 7);
    auto inv = inverse(a);
    CHECK(a * inv == RatMatrix::identity(2));
}
