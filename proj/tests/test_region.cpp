#include "doctest.h"

#include "multireg/region.hpp"

using namespace multireg;

namespace {
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
const std::vector<Vec> STD2 = {V2(1, 0), V2(0, 1)};
const std::vector<Vec> STD1 = {V1(1)};
} // namespace

TEST_CASE("make_region drops redundant generators") {
    Region R = make_region(STD2, {V2(0, 0), V2(1, 1), V2(2, 0)});
    REQUIRE(R.gens.size() == 1);
    CHECK(R.gens[0] == V2(0, 0));
    CHECK(region_member(R, V2(5, 3)));
    CHECK_FALSE(region_member(R, V2(-1, 0)));
}

TEST_CASE("region operations") {
    Region A = make_region(STD2, {V2(1, 0)});
    Region B = make_region(STD2, {V2(0, 1)});
    Region I = region_intersect(A, B);
    REQUIRE(I.gens.size() == 1);
    CHECK(I.gens[0] == V2(1, 1));

    Region U = region_union(A, B);
    CHECK(U.gens.size() == 2);
    CHECK(region_member(U, V2(1, 0)));
    CHECK(region_member(U, V2(0, 1)));
    CHECK_FALSE(region_member(U, V2(0, 0)));

    Region T = region_translate(A, V2(-1, 2));
    REQUIRE(T.gens.size() == 1);
    CHECK(T.gens[0] == V2(0, 2));

    Region S = region_sum(A, B);
    REQUIRE(S.gens.size() == 1);
    CHECK(S.gens[0] == V2(1, 1));
}

TEST_CASE("twist data over the integer line") {
    Region regS = make_region(STD1, {V1(0)});

    // syzygies one step late force regularity one step up
    TypeJ J;
    J.levels = {{V1(0)}, {V1(2)}};
    Region R = reg_of_J(J, regS, STD1);
    REQUIRE(R.exact);
    REQUIRE(R.gens.size() == 1);
    CHECK(R.gens[0] == V1(1));

    // a linear resolution keeps regularity at the cover degree
    TypeJ lin;
    lin.levels = {{V1(0)}, {V1(1)}, {V1(2)}};
    Region L = reg_of_J(lin, regS, STD1);
    REQUIRE(L.gens.size() == 1);
    CHECK(L.gens[0] == V1(0));

    // the full region is the meet of the first two cohomological indices
    Region l0 = reg_of_J_level(J, regS, STD1, 0);
    Region l1 = reg_of_J_level(J, regS, STD1, 1);
    for (long d = -4; d <= 6; ++d) {
        bool whole = region_member(R, V1(d));
        bool split = region_member(l0, V1(d)) && region_member(l1, V1(d));
        CHECK(whole == split);
    }
}

TEST_CASE("degree sets of a principal region") {
    Region regS = make_region(STD1, {V1(0)});
    Region D = make_region(STD1, {V1(2)});
    auto p0 = dreg_in_box(D, regS, 0, V1(-5), V1(20));
    auto m0 = maximal_in_cone_order(p0, STD1);
    REQUIRE(m0.size() == 1);
    CHECK(m0[0] == V1(2));
    auto p3 = dreg_in_box(D, regS, 3, V1(-5), V1(20));
    auto m3 = maximal_in_cone_order(p3, STD1);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == V1(5));

    CHECK(dreg_member(D, regS, 1, V1(3)));
    CHECK_FALSE(dreg_member(D, regS, 1, V1(4)));
}

TEST_CASE("degree sets of the empty region hold everything") {
    Region regS = make_region(STD1, {V1(0)});
    Region empty = make_region(STD1, {});
    CHECK(empty.empty());
    CHECK(dreg_member(empty, regS, 0, V1(-3)));
    CHECK(dreg_member(empty, regS, 2, V1(7)));
}

TEST_CASE("maximal elements in the cone preorder") {
    auto mx = maximal_in_cone_order({V2(0, 0), V2(1, 0), V2(0, 1)}, STD2);
    REQUIRE(mx.size() == 2);
    VecSet s(mx.begin(), mx.end());
    CHECK(s.count(V2(1, 0)));
    CHECK(s.count(V2(0, 1)));
}

TEST_CASE("box enumeration is complete and ordered") {
    auto pts = box_points(V2(-1, -1), V2(1, 1));
    CHECK(pts.size() == 9);
    VecSet s(pts.begin(), pts.end());
    CHECK(s.count(V2(-1, -1)));
    CHECK(s.count(V2(1, 1)));
    CHECK(s.count(V2(0, 0)));
}
