// End model of holim and coend model of hocolim on punctured/copunctured cubes.

#include <catch2/catch_amalgamated.hpp>

#include "cubecalc/corpus.hpp"
#include "cubecalc/hocolim.hpp"
#include "cubecalc/holim.hpp"
#include "cubecalc/homology.hpp"

using namespace cubecalc;

namespace {

// punctured square pt -> M <- pt hitting vertices v0, v1
CubeDiagram cospan_square(const SSetPtr& M, SimplexId v0, SimplexId v1) {
    const int D = M->trunc;
    CubeDiagram d;
    d.shape = CubeShape(1, CubeVariant::Punctured);
    d.trunc = D;
    auto pt = point_sset(D);
    d.obj[0b01] = pt;
    d.obj[0b10] = pt;
    d.obj[0b11] = M;
    d.arr[{0b01, 0b11}] = constant_map(pt, M, v0);
    d.arr[{0b10, 0b11}] = constant_map(pt, M, v1);
    d.validate();
    return d;
}

CubeDiagram span_square(const SSetPtr& A, const SimplicialMap& f, const SimplicialMap& g) {
    // copunctured square: center A at corner {}, targets at {0} and {1}
    CubeDiagram d;
    d.shape = CubeShape(1, CubeVariant::Copunctured);
    d.trunc = A->trunc;
    d.obj[0b00] = A;
    d.obj[0b01] = f.dst;
    d.obj[0b10] = g.dst;
    d.arr[{0b00, 0b01}] = f;
    d.arr[{0b00, 0b10}] = g;
    d.validate();
    return d;
}

}  // namespace

TEST_CASE("holim of punctured squares") {
    const int D = 3;
    Workspace ws;
    SECTION("terminal diagram") {
        auto d = cospan_square(point_sset(D), 0, 0);
        auto E = holim_punctured(ws, d);
        for (int m = 0; m <= D; ++m) CHECK(E.space->size(m) == 1);
    }
    SECTION("paths in Delta^1 between its endpoints") {
        auto d1 = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto E = holim_punctured(ws, cospan_square(d1, 0, 1));
        CHECK(E.space->size(0) == 1);  // only the nondegenerate edge, read as a path
        auto prof = homology_profile(*E.space);
        CHECK(prof.betti_at(0) == 1);
    }
    SECTION("paths between distinct components are empty") {
        auto s0 = zero_sphere(D);
        auto E = holim_punctured(ws, cospan_square(s0, 0, 1));
        CHECK(E.space->size(0) == 0);
    }
    SECTION("projections are simplicial") {
        auto d1 = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto E = holim_punctured(ws, cospan_square(d1, 0, 1));
        for (const auto& p : E.projections) p.validate("holim projection");
    }
    SECTION("budget error on untrusted corners") {
        auto d1 = standard_simplex(OrderedFiniteSet({0, 1}), D);
        auto low = std::make_shared<SimplicialSet>(*d1);
        low->trusted = 0;
        auto d = cospan_square(d1, 0, 1);
        d.obj[0b11] = low;
        CHECK_THROWS_AS(holim_punctured(ws, d), TruncationError);
    }
}

TEST_CASE("hocolim of copunctured squares") {
    const int D = 3;
    Workspace ws;
    SECTION("constant point diagram is the bar interval") {
        auto pt = point_sset(D);
        auto d = span_square(pt, identity_map(pt), identity_map(pt));
        auto C = hocolim_copunctured(ws, d);
        auto prof = homology_profile(*C.space);
        CHECK(prof.betti_at(0) == 1);
        for (int k = 1; k <= prof.valid_dim; ++k) CHECK(prof.betti_at(k) == 0);
        for (const auto& ins : C.insertions) ins.validate("hocolim insertion");
    }
    SECTION("identity arrows reproduce the homology of X") {
        auto X = circle_two_edges(D);
        auto d = span_square(X, identity_map(X), identity_map(X));
        auto C = hocolim_copunctured(ws, d);
        CHECK(profiles_equal(homology_profile(*C.space), homology_profile(*X)));
    }
    SECTION("suspension square pt <- S0 -> pt is a circle") {
        auto s0 = zero_sphere(D);
        auto pt = point_sset(D);
        auto d = span_square(s0, constant_map(s0, pt, 0), constant_map(s0, pt, 0));
        auto C = hocolim_copunctured(ws, d);
        CHECK(profiles_equal(homology_profile(*C.space), homology_profile(*circle_two_edges(D))));
    }
}

TEST_CASE("tensor-hom adjunction on tiny instances") {
    const int D = 2;
    Workspace ws;
    auto d1 = standard_simplex(OrderedFiniteSet({0, 1}), D);
    auto diag = cospan_square(d1, 0, 1);
    auto E = holim_punctured(ws, diag);
    for (const SSetPtr& Y : {point_sset(D), zero_sphere(D)}) {
        // left side: maps Y -> holim
        auto lhs = enumerate_maps(ws, Y, E.space);
        // right side: natural families Y x Delta^S -> X(S)
        auto corners = diag.shape.corners();
        std::vector<std::vector<Assignment>> per_corner;
        std::vector<Product> prisms;
        for (Mask m : corners) {
            auto P = product(Y, standard_simplex(mask_to_set(m), D));
            prisms.push_back(P);
            per_corner.push_back(enumerate_maps(ws, P.space, diag.at(m)));
        }
        long rhs = 0;
        // filter compatible triples (singleton corners are points here, so
        // only the compatibility of the big corner with the two legs matters)
        for (const auto& a2 : per_corner[2]) {
            auto f2 = materialize(prisms[2].space, diag.at(corners[2]), a2);
            bool ok = true;
            for (int leg = 0; leg < 2 && ok; ++leg) {
                auto fl = materialize(prisms[leg].space, diag.at(corners[leg]), per_corner[leg][0]);
                // the inclusion Y x Delta^{S_leg} -> Y x Delta^{S_big}
                auto dleg = DeltaModel::get(0, D);
                auto dbig = DeltaModel::get(1, D);
                for (int k = 0; k <= D && ok; ++k)
                    for (SimplexId y = 0; y < Y->size(k) && ok; ++y) {
                        SimplexId s = dleg->space->degen_to(0, k);
                        (void)s;
                        SimplexId vbig = dbig->space->degen_to(leg, k);
                        SimplexId src = prod_id(*dleg->space, k, y, 0);
                        SimplexId dst = prod_id(*dbig->space, k, y, vbig);
                        SimplexId lhsv = diag.covering(corners[leg], corners[2]).comp[k][fl.comp[k][src]];
                        if (lhsv != f2.comp[k][dst]) ok = false;
                    }
            }
            if (ok) ++rhs;
        }
        REQUIRE(per_corner[0].size() == 1);
        REQUIRE(per_corner[1].size() == 1);
        CHECK(static_cast<long>(lhs.size()) == rhs);
    }
}
