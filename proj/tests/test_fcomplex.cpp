// Map enumeration and function complexes.

#include <catch2/catch_amalgamated.hpp>

#include "cubecalc/corpus.hpp"
#include "cubecalc/fcomplex.hpp"
#include "cubecalc/homology.hpp"

using namespace cubecalc;

TEST_CASE("enumerate_maps basics") {
    const int D = 2;
    Workspace ws;
    auto d1 = standard_simplex(OrderedFiniteSet({0, 1}), D);
    auto maps = enumerate_maps(ws, d1, d1);
    // oracle: maps Delta^1 -> Delta^1 = monotone vertex pairs (0,0),(0,1),(1,1)
    CHECK(maps.size() == 3);
    for (const auto& a : maps) materialize(d1, d1, a).validate("enumerated map");

    auto pt = point_sset(D);
    CHECK(enumerate_maps(ws, d1, pt).size() == 1);
    CHECK(enumerate_maps(ws, pt, d1).size() == 2);

    auto c2 = circle_two_edges(D);
    auto loops = enumerate_maps(ws, c2, c2);
    for (const auto& a : loops) materialize(c2, c2, a).validate("circle map");
    CHECK(loops.size() >= 3);
}

TEST_CASE("function complex") {
    const int D = 3;
    Workspace ws;
    SECTION("Map(point, Y) is Y") {
        auto Y = circle_two_edges(D);
        auto F = function_complex(ws, point_sset(D), Y, D);
        for (int m = 0; m <= D; ++m) CHECK(F.space->size(m) == Y->size(m));
        CHECK(profiles_equal(homology_profile(*F.space), homology_profile(*Y)));
    }
    SECTION("Map(A, point) is a point") {
        auto A = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto F = function_complex(ws, A, point_sset(D), D - 1);
        for (int m = 0; m <= D; ++m) CHECK(F.space->size(m) == 1);
    }
    SECTION("Map(Delta^1, Delta^1) level 0 has three maps") {
        auto A = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto F = function_complex(ws, A, A, D - 1);
        CHECK(F.space->size(0) == 3);
    }
    SECTION("budget errors name the required truncation") {
        auto A = standard_simplex(OrderedFiniteSet({0, 1, 2}), D);
        try {
            function_complex(ws, A, A, D);
            FAIL("expected TruncationError");
        } catch (const TruncationError& e) {
            CHECK(e.required == 2 + D);
        }
    }
    SECTION("trust bookkeeping") {
        auto A = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto F = function_complex(ws, A, A, 1);
        CHECK(F.space->trusted == 1);
        CHECK(homology_profile(*F.space).valid_dim == 0);
    }
}
