#include "doctest.h"

#include "multireg/family.hpp"

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

using namespace multireg;

namespace {
const std::string DATA = MULTIREG_DATA_DIR;
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
} // namespace

TEST_CASE("primitive collections of the standard fans") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    IdealFamily fp = primitive_collections(pp);
    REQUIRE(fp.collections.size() == 2);
    CHECK(fp.collections[0] == std::vector<int>{0, 1});
    CHECK(fp.collections[1] == std::vector<int>{2, 3});
    CHECK(fp.orthogonal);
    REQUIRE(fp.v[0]);
    REQUIRE(fp.v[1]);
    CHECK(*fp.v[0] == V2(1, 0));
    CHECK(*fp.v[1] == V2(0, 1));
    CHECK(validate_orthogonality(pp, fp).empty());

    Ring p2 = load_ring_file(DATA + "/p2.ring");
    IdealFamily f2 = primitive_collections(p2);
    REQUIRE(f2.collections.size() == 1);
    CHECK(f2.collections[0] == std::vector<int>{0, 1, 2});
    CHECK(f2.orthogonal);

    Ring p12 = load_ring_file(DATA + "/p1p2.ring");
    IdealFamily f12 = primitive_collections(p12);
    REQUIRE(f12.collections.size() == 2);
    CHECK(f12.collections[0] == std::vector<int>{0, 1});
    CHECK(f12.collections[1] == std::vector<int>{2, 3, 4});
}

TEST_CASE("twisted fans have no orthogonal functionals") {
    Ring hz = load_ring_file(DATA + "/hirzebruch_t2.ring");
    IdealFamily f = primitive_collections(hz);
    REQUIRE(f.collections.size() == 2);
    CHECK(f.collections[0] == std::vector<int>{0, 2});
    CHECK(f.collections[1] == std::vector<int>{1, 3});
    CHECK_FALSE(f.orthogonal);
    CHECK_FALSE(f.no_orthogonal_reason.empty());
    CHECK_THROWS_AS(family_functional(f, 1u, hz.rank), std::invalid_argument);
}

TEST_CASE("subfamily helpers") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    IdealFamily f = primitive_collections(pp);
    CHECK(family_mask_str(1) == "{P1}");
    CHECK(family_mask_str(5) == "{P1,P3}");
    CHECK(family_union_vars(f, 3) == std::vector<int>{0, 1, 2, 3});
    auto B1 = family_ideal(pp, f, 1);
    REQUIRE(B1.size() == 2);
    CHECK(B1[0] == Vec{1, 0, 0, 0});
    CHECK(family_functional(f, 3, pp.rank) == V2(1, 1));
}

TEST_CASE("family membership for the free ring") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    FamilyContext ctx(pp, primitive_collections(pp));
    ModuleData S = ModuleData::free_module({V2(0, 0)});

    CHECK(regstar_membership(ctx, S, V2(0, 0)).status == Mem::Yes);
    CHECK(regstar_membership(ctx, S, V2(2, 1)).status == Mem::Yes);
    CHECK(regstar_membership(ctx, S, V2(-1, 0)).status == Mem::No);
    CHECK(regstar_membership(ctx, S, V2(0, -1)).status == Mem::No);

    FamilyAnswer bv = regBv_membership(ctx, S, V2(0, 0));
    CHECK(bv.status == Mem::Yes);
    CHECK_FALSE(bv.certified_only);
    CHECK(regBv_membership(ctx, S, V2(-1, 0)).status == Mem::No);
}

TEST_CASE("resolution input gives one-directional answers") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    FamilyContext ctx(pp, primitive_collections(pp));
    GradedComplex F = minimalize_complex(
        taylor_complex(pp, {Vec{1, 0, 1, 0}, Vec{1, 0, 0, 1}}));
    ModuleData M = ModuleData::from_type_J(extract_type_J(F));

    FamilyAnswer yes = regstar_membership(ctx, M, V2(1, 1));
    CHECK(yes.status == Mem::Yes);
    CHECK(yes.certified_only);
    // a failed certificate is not a disproof
    CHECK(regstar_membership(ctx, M, V2(0, 0)).status == Mem::Unknown);
    CHECK(regBv_membership(ctx, M, V2(0, 0)).status == Mem::Unknown);
    FamilyAnswer bv = regBv_membership(ctx, M, V2(1, 1));
    CHECK(bv.status == Mem::Yes);
    CHECK(bv.certified_only);
}

TEST_CASE("refusals carry the reason") {
    Ring hz = load_ring_file(DATA + "/hirzebruch_t2.ring");
    FamilyContext ctx(hz, primitive_collections(hz));
    ModuleData S = ModuleData::free_module({V2(0, 0)});
    FamilyAnswer a = regBv_membership(ctx, S, V2(1, 1));
    CHECK(a.status == Mem::Unknown);
    CHECK(a.detail.find("refused") != std::string::npos);
}

TEST_CASE("pipeline over a resolution") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    FamilyContext ctx(pp, primitive_collections(pp));
    GradedComplex F = minimalize_complex(
        taylor_complex(pp, {Vec{1, 0, 1, 0}, Vec{1, 0, 0, 1}}));

    VresReport good = vres_pipeline(ctx, F, V2(1, 1), {Int(1), Int(1), Int(2)});
    CHECK(good.applicable);
    CHECK(good.failures.empty());
    CHECK(good.regv.status == Mem::Yes);
    CHECK(good.bounds_ok);
    CHECK(good.pass);
    REQUIRE(good.level_sets.size() == F.length());
    CHECK(halfspace_contains(good.level_sets[0], V2(0, 0)));
    CHECK_FALSE(halfspace_contains(good.level_sets[0], V2(2, 2)));
    CHECK(halfspace_contains(good.level_sets[1], V2(2, 0)));

    VresReport bad = vres_pipeline(ctx, F, V2(0, 0), {Int(0), Int(0), Int(0)});
    CHECK(bad.applicable);
    CHECK_FALSE(bad.failures.empty());
    CHECK_FALSE(bad.bounds_ok);
    CHECK_FALSE(bad.pass);

    CHECK_THROWS_AS(vres_pipeline(ctx, F, V2(1, 1), {Int(1)}),
                    std::invalid_argument);

    Ring hz = load_ring_file(DATA + "/hirzebruch_t2.ring");
    FamilyContext hctx(hz, primitive_collections(hz));
    GradedComplex HF = minimalize_complex(taylor_complex(hz, hz.ideal));
    VresReport refused =
        vres_pipeline(hctx, HF, V2(0, 0), {Int(0), Int(0), Int(0)});
    CHECK_FALSE(refused.applicable);
    CHECK(refused.refusal.find("orthogonal") != std::string::npos);
}
