#include "doctest.h"

#include "multireg/region.hpp"
#include "multireg/semigroup.hpp"

using namespace multireg;

namespace {
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
} // namespace

TEST_CASE("pointedness of generator lists") {
    Pointedness p = check_pointed({V1(2), V1(3)});
    CHECK(p.pointed);
    CHECK(vec_dot(p.phi, V1(2)) >= 1);
    CHECK(vec_dot(p.phi, V1(3)) >= 1);

    Pointedness q = check_pointed({V2(1, 0), V2(-1, 0)});
    CHECK_FALSE(q.pointed);
    CHECK_FALSE(q.relation.empty());

    Pointedness z = check_pointed({V2(0, 0), V2(1, 0)});
    CHECK_FALSE(z.pointed);
    CHECK(z.zero_gen == 0);

    Pointedness mixed = check_pointed({V2(1, 0), V2(-2, 1), V2(0, 1)});
    CHECK(mixed.pointed);
}

TEST_CASE("numerical semigroup membership with witnesses") {
    std::vector<Vec> g23 = {V1(2), V1(3)};
    CHECK(semigroup_member(g23, V1(0)).status == Mem::Yes);
    CHECK(semigroup_member(g23, V1(1)).status == Mem::No);
    CHECK(semigroup_member(g23, V1(-4)).status == Mem::No);
    MemberResult r = semigroup_member(g23, V1(7));
    REQUIRE(r.status == Mem::Yes);
    Int total = 0;
    for (size_t i = 0; i < r.coeffs.size(); ++i)
        total += r.coeffs[i] * g23[i][0];
    CHECK(total == 7);

    // the largest gap of <3,5> is 7
    std::vector<Vec> g35 = {V1(3), V1(5)};
    for (long d : {1, 2, 4, 7})
        CHECK(semigroup_member(g35, V1(d)).status == Mem::No);
    for (long d : {3, 5, 6, 8, 9, 10, 11})
        CHECK(semigroup_member(g35, V1(d)).status == Mem::Yes);
}

TEST_CASE("group directions are quotiented away") {
    // x-axis acts invertibly, y only in steps of +2
    std::vector<Vec> gens = {V2(1, 0), V2(-1, 0), V2(0, 2)};
    CHECK(group_member(gens, V2(5, 4)).status == Mem::Yes);
    CHECK(group_member(gens, V2(-7, 6)).status == Mem::Yes);
    CHECK(group_member(gens, V2(0, 1)).status == Mem::No);
    CHECK(group_member(gens, V2(0, -2)).status == Mem::No);
}

TEST_CASE("shifted cone generators") {
    std::vector<Vec> C = {V2(1, 0), V2(0, 1)};
    auto up2 = shifted_cone_gens(C, 2);
    REQUIRE(up2.size() == 3);
    VecSet s2(up2.begin(), up2.end());
    CHECK(s2.count(V2(2, 0)));
    CHECK(s2.count(V2(1, 1)));
    CHECK(s2.count(V2(0, 2)));

    auto down2 = shifted_cone_gens(C, -2);
    VecSet sm(down2.begin(), down2.end());
    CHECK(sm.count(V2(-2, 0)));
    CHECK(sm.count(V2(-1, -1)));
    CHECK(sm.count(V2(0, -2)));

    auto zero = shifted_cone_gens(C, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == V2(0, 0));
}

TEST_CASE("membership in a one-generator cone is a divisibility check") {
    std::vector<Vec> C = {V1(2)};
    Region R = shifted_cone(C, 0);
    CHECK(region_member(R, V1(0)));
    CHECK(region_member(R, V1(6)));
    CHECK_FALSE(region_member(R, V1(3)));
    CHECK_FALSE(region_member(R, V1(-2)));
}
