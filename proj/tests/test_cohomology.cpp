#include "doctest.h"

#include "multireg/cohomology.hpp"
#include "multireg/ring.hpp"

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

using namespace multireg;

namespace {
const std::string DATA = MULTIREG_DATA_DIR;
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
std::vector<Vec> S1 = {V1(0)};
std::vector<Vec> S2 = {V2(0, 0)};
} // namespace

TEST_CASE("polynomial ring in two variables") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CohCache coh(cl);
    // top local cohomology is dual to the ring: dim = -d-1 below -1
    for (long d = -6; d <= 3; ++d) {
        PieceDim p = coh_free_piece(coh, S1, 2, V1(d));
        REQUIRE(p.finite);
        CHECK(p.dim == Int(d <= -2 ? -d - 1 : 0));
    }
    for (size_t i : {0u, 1u})
        for (long d : {-3L, 0L, 2L}) {
            PieceDim p = coh_free_piece(coh, S1, i, V1(d));
            REQUIRE(p.finite);
            CHECK(p.dim == 0);
        }
}

TEST_CASE("product of two lines follows the Kunneth pattern") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CohCache coh(pp);
    auto dim = [&](size_t i, long a, long b) {
        PieceDim p = coh_free_piece(coh, S2, i, V2(a, b));
        REQUIRE(p.finite);
        return p.dim;
    };
    CHECK(dim(3, -2, -2) == 1);
    CHECK(dim(3, -2, -3) == 2);
    CHECK(dim(3, -4, -2) == 3);
    CHECK(dim(2, 1, -2) == 2);
    CHECK(dim(2, -2, 1) == 2);
    CHECK(dim(2, 0, -3) == 2);
    for (size_t i = 0; i <= 4; ++i) {
        CHECK(dim(i, 0, 0) == 0);
        CHECK(dim(i, -1, -1) == 0);
    }
}

TEST_CASE("weighted ring with weights 2,3,5") {
    Ring w = load_ring_file(DATA + "/weighted_2_3_5.ring");
    CohCache coh(w);
    auto dim = [&](long d) {
        PieceDim p = coh_free_piece(coh, S1, 3, V1(d));
        REQUIRE(p.finite);
        return p.dim;
    };
    CHECK(dim(-10) == 1); // the socle degree -sum of weights
    CHECK(dim(-12) == 1); // dual to degree 2: x1
    CHECK(dim(-16) == 2); // dual to degree 6: x1^3, x2^2
    for (long d = -9; d <= 0; ++d) CHECK(dim(d) == 0);
}

TEST_CASE("twists relocate the graded piece") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CohCache coh(pp);
    std::vector<Vec> shifted = {V2(1, 2)};
    PieceDim a = coh_free_piece(coh, shifted, 3, V2(-1, 0));
    PieceDim b = coh_free_piece(coh, S2, 3, V2(-2, -2));
    REQUIRE(a.finite);
    REQUIRE(b.finite);
    CHECK(a.dim == b.dim);
    CHECK(a.dim == 1);
}

TEST_CASE("regularity membership and region") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CohCache ccl(cl);
    CHECK(regS_membership(ccl, V1(0)).status == Mem::Yes);
    CHECK(regS_membership(ccl, V1(-1)).status == Mem::No);

    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CohCache cpp(pp);
    CHECK(regS_membership(cpp, V2(0, 0)).status == Mem::Yes);
    CHECK(regS_membership(cpp, V2(-1, 0)).status == Mem::No);
    CHECK(regS_membership(cpp, V2(3, 1)).status == Mem::Yes);

    Ring hz = load_ring_file(DATA + "/hirzebruch_t3.ring");
    CohCache chz(hz);
    Region r = regS_region(chz, V2(-6, -6), V2(6, 6));
    REQUIRE(r.exact);
    REQUIRE(r.gens.size() == 2);
    VecSet s(r.gens.begin(), r.gens.end());
    CHECK(s.count(V2(2, 0)));
    CHECK(s.count(V2(0, 1)));
}

TEST_CASE("torsion of a bounded quotient") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    MonomialModule M;
    M.shifts = {V1(0)};
    M.relations = {{0, V2(2, 0)}, {0, V2(1, 1)}};
    // S/(x^2, xy): the class of x dies under both variables
    for (long d : {0, 1, 2, 3}) {
        TorsionDim e = h0_torsion_exact(cl, M, V1(d));
        TorsionDim it = h0_torsion_iterative(cl, M, V1(d), 3);
        CHECK(e.exact);
        CHECK(e.dim == Int(d == 1 ? 1 : 0));
        CHECK(it.dim == e.dim);
    }
}

TEST_CASE("truncation witness stabilizes") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CohCache coh(cl);
    for (long d = -4; d <= 1; ++d) {
        OracleDim o1 = cech_oracle_piece(cl, S1, V1(d), 7);
        OracleDim o2 = cech_oracle_piece(cl, S1, V1(d), 9);
        REQUIRE(o1.h.size() == o2.h.size());
        for (size_t i = 0; i < o1.h.size(); ++i) {
            CHECK(o1.h[i] == o2.h[i]);
            PieceDim p = coh_free_piece(coh, S1, i, V1(d));
            REQUIRE(p.finite);
            CHECK(p.dim == o1.h[i]);
        }
    }
}

TEST_CASE("intersection certificates only fire on true vanishing") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    std::vector<std::vector<Vec>> ideals = {
        {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}}, // (x0, x1)
        {Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}}, // (y0, y1)
    };
    MVContext mv(pp, ideals);
    CHECK(mv.vanishes(S2, 1, V2(0, 0)));
    CHECK(mv.vanishes(S2, 2, V2(0, 0)));
    CHECK_FALSE(mv.vanishes(S2, 2, V2(1, -2))); // h^2 = 2 there
    CHECK_FALSE(mv.vanishes(S2, 3, V2(-2, -2))); // h^3 = 1 there
}

TEST_CASE("halfspace regions") {
    HalfspaceRegion H = {{V2(-1, 0), Int(-2)}, {V2(0, -1), Int(-3)}};
    CHECK(halfspace_contains(H, V2(2, 3)));
    CHECK(halfspace_contains(H, V2(0, 0)));
    CHECK_FALSE(halfspace_contains(H, V2(3, 3)));
    CHECK_FALSE(halfspace_contains(H, V2(2, 4)));
}
