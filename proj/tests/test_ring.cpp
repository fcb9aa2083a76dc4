#include "doctest.h"

#include "multireg/coarsen.hpp"
#include "multireg/ring.hpp"

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

using namespace multireg;

namespace {
const std::string DATA = MULTIREG_DATA_DIR;
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }
} // namespace

TEST_CASE("ring files load with their stated data") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CHECK(cl.rank == 1);
    CHECK(cl.nvars() == 2);
    REQUIRE(cl.config.size() == 1);
    CHECK(cl.config[0] == V1(1));
    CHECK(cl.ideal.size() == 2);
    REQUIRE(cl.regS_hint.size() == 1);
    CHECK(cl.regS_hint[0] == V1(0));

    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CHECK(pp.rank == 2);
    CHECK(pp.nvars() == 4);
    CHECK(pp.ideal.size() == 4);
    CHECK(pp.fan_cones.size() == 4);
    CHECK(pp.var_index("y1") == 3);
    CHECK(pp.var_index("z9") == -1);
}

TEST_CASE("missing or malformed files are reported") {
    CHECK_THROWS_AS(load_ring_file(DATA + "/no_such.ring"), RingSpecError);
}

TEST_CASE("degrees of exponent vectors") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CHECK(cl.degree_of_expo(V2(2, 3)) == V1(5));

    Ring w = load_ring_file(DATA + "/weighted_2_3_5.ring");
    Vec e(3, Int(1));
    CHECK(w.degree_of_expo(e) == V1(10));
}

TEST_CASE("monomial enumeration") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    CHECK(monomials_of_degree(cl, V1(3), 1000).size() == 4);
    CHECK(monomials_of_degree(cl, V1(0), 1000).size() == 1);
    CHECK(monomials_of_degree(cl, V1(-1), 1000).empty());

    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    CHECK(monomials_of_degree(pp, V2(1, 1), 1000).size() == 4);
    CHECK(monomials_of_degree(pp, V2(2, 0), 1000).size() == 3);

    // weights 2,3,5: degree 5 = x1*x2 or x3
    Ring w = load_ring_file(DATA + "/weighted_2_3_5.ring");
    CHECK(monomials_of_degree(w, V1(5), 1000).size() == 2);
    CHECK(monomials_of_degree(w, V1(1), 1000).empty());
}

TEST_CASE("minimal generators of a monomial ideal") {
    auto gens = minimalize_monomials({V2(2, 0), V2(3, 0), V2(1, 1)});
    CHECK(gens.size() == 2);
    CHECK(divides(V2(1, 1), V2(2, 1)));
    CHECK_FALSE(divides(V2(2, 0), V2(1, 1)));
}

TEST_CASE("coarsening constants from a weight functional") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    Coarsening w = classify_coarsening(pp, V2(1, 1));
    CHECK(w.positive);
    CHECK(w.pos_vars.size() == 4);
    CHECK(w.c == 1);
    CHECK(w.s == 1);

    Ring hz = load_ring_file(DATA + "/hirzebruch_t2.ring");
    Coarsening h = classify_coarsening(hz, V2(1, 2));
    CHECK_FALSE(h.positive); // x2 has weight 0
    CHECK(h.pos_vars.size() == 3);
    CHECK(h.c == 2);
    CHECK(h.s == 2);
}
