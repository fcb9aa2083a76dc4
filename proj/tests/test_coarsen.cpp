#include "doctest.h"

#include "multireg/coarsen.hpp"

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

using namespace multireg;

namespace {
const std::string DATA = MULTIREG_DATA_DIR;
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
} // namespace

TEST_CASE("coarse regularity numbers of free modules") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    ModuleData S = ModuleData::free_module({V2(0, 0)});
    for (const Vec& v : {V2(1, 0), V2(0, 1), V2(1, 1)}) {
        Coarsening w = classify_coarsening(pp, v);
        Vregnum n = vregnum(pp, S, w);
        CHECK_FALSE(n.minus_infinity);
        CHECK_FALSE(n.upper_bound_only);
        CHECK(n.value == 0);
    }

    Ring w12 = load_ring_file(DATA + "/weighted_1_2.ring");
    ModuleData S1m = ModuleData::free_module({V1(0)});
    Coarsening w = classify_coarsening(w12, V1(1));
    CHECK(w.c == 2);
    Vregnum n = vregnum(w12, S1m, w);
    CHECK_FALSE(n.minus_infinity);
    CHECK(n.value == 0);
}

TEST_CASE("membership above and below the threshold") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    ModuleData S = ModuleData::free_module({V2(0, 0)});
    Coarsening w = classify_coarsening(pp, V2(1, 1));
    CHECK(vreg_membership(pp, S, w, Int(0)).status == Mem::Yes);
    CHECK(vreg_membership(pp, S, w, Int(5)).status == Mem::Yes);
    CHECK(vreg_membership(pp, S, w, Int(-1)).status == Mem::No);
}

TEST_CASE("shifting a free module shifts its number") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    Coarsening w = classify_coarsening(pp, V2(1, 1));
    Vregnum base = vregnum(pp, ModuleData::free_module({V2(0, 0)}), w);
    Vregnum sh = vregnum(pp, ModuleData::free_module({V2(2, 3)}), w);
    CHECK(sh.value == base.value + 5);
}

TEST_CASE("resolution input is flagged as an upper bound") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    TypeJ J;
    J.levels = {{V2(0, 0)}, {V2(1, 1), V2(1, 1)}, {V2(1, 2)}};
    ModuleData M = ModuleData::from_type_J(J);
    Coarsening w = classify_coarsening(pp, V2(1, 1));
    Vregnum n = vregnum(pp, M, w);
    CHECK(n.upper_bound_only);
    VregAnswer a = vreg_membership(pp, M, w, n.value);
    CHECK(a.status == Mem::Yes);
    CHECK(a.certified_only);
}

TEST_CASE("bundled bounds check every functional") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    ModuleData S = ModuleData::free_module({V2(0, 0)});
    std::vector<Coarsening> ws = {classify_coarsening(pp, V2(1, 0)),
                                  classify_coarsening(pp, V2(0, 1))};
    CHECK(bstar_regular(pp, S, ws, {Int(0), Int(0)}).status == Mem::Yes);
    BstarAnswer bad = bstar_regular(pp, S, ws, {Int(0), Int(-1)});
    CHECK(bad.status == Mem::No);
    CHECK_FALSE(bad.failures.empty());
}

TEST_CASE("halfplane criterion distinguishes the functionals") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CohCache full(pp);
    ModuleData S = ModuleData::free_module({V2(0, 0)});

    // against the full irrelevant ideal, a single axis functional cannot
    // bound the mixed support pieces
    HalfplaneReport fullrep = halfplane_implies_reg(full, S, V2(0, 0), V2(1, 0), 1);
    CHECK(fullrep.applicable);
    CHECK_FALSE(fullrep.all);

    // against the ideal of one factor alone it succeeds
    CohCache part(pp, {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}});
    HalfplaneReport partrep = halfplane_implies_reg(part, S, V2(0, 0), V2(1, 0), 1);
    CHECK(partrep.applicable);
    CHECK(partrep.all);
    CHECK_FALSE(partrep.certified_only);
}

TEST_CASE("functionals that are not coarsenings are refused") {
    Ring hz = load_ring_file(DATA + "/hirzebruch_t2.ring");
    CHECK_THROWS_AS(classify_coarsening(hz, V2(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(classify_coarsening(hz, V2(0, 0)), std::invalid_argument);
}
