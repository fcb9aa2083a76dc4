#include "doctest.h"

#include "multireg/resolution.hpp"
#include "multireg/ring.hpp"

#include <algorithm>

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

using namespace multireg;

namespace {
const std::string DATA = MULTIREG_DATA_DIR;
Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }

std::vector<Int> sorted_scalars(const std::vector<Vec>& vs) {
    std::vector<Int> out;
    for (const Vec& v : vs) out.push_back(v[0]);
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace

TEST_CASE("two generators resolve with a single overlap") {
    Ring pp = load_ring_file(DATA + "/p1p1.ring");
    std::vector<Vec> gens = {Vec{1, 0, 1, 0}, Vec{1, 0, 0, 1}}; // x0y0, x0y1
    GradedComplex T = taylor_complex(pp, gens);
    REQUIRE(T.length() == 3);
    CHECK(T.shifts[0] == std::vector<Vec>{V2(0, 0)});
    CHECK(T.shifts[1].size() == 2);
    CHECK(T.shifts[1][0] == V2(1, 1));
    CHECK(T.shifts[2] == std::vector<Vec>{V2(1, 2)});
    CHECK(validate_complex(pp, T).empty());

    GradedComplex M = minimalize_complex(T);
    CHECK(M.shifts == T.shifts); // already minimal
}

TEST_CASE("minimalization prunes the square of the maximal ideal") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    std::vector<Vec> gens = {V2(2, 0), V2(1, 1), V2(0, 2)};
    GradedComplex T = taylor_complex(cl, gens);
    CHECK(validate_complex(cl, T).empty());
    // the raw complex carries a superfluous pair in degree 4
    CHECK(T.shifts[2].size() == 3);
    CHECK(T.shifts[3].size() == 1);

    GradedComplex M = minimalize_complex(T);
    CHECK(validate_complex(cl, M).empty());
    REQUIRE(M.length() == 3);
    CHECK(M.shifts[0].size() == 1);
    CHECK(M.shifts[1].size() == 3);
    CHECK(M.shifts[2].size() == 2);
    CHECK(sorted_scalars(M.shifts[1]) == std::vector<Int>{2, 2, 2});
    CHECK(sorted_scalars(M.shifts[2]) == std::vector<Int>{3, 3});

    TypeJ J = extract_type_J(M);
    REQUIRE(J.levels.size() == 3);
    CHECK(J.levels[0] == M.shifts[0]);
    CHECK(J.levels[2] == M.shifts[2]);
}

TEST_CASE("validation notices inhomogeneous maps") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    GradedComplex T = taylor_complex(cl, {V2(1, 0), V2(0, 1)});
    REQUIRE(validate_complex(cl, T).empty());
    GradedComplex broken = T;
    broken.shifts[1][0] = vec_add(broken.shifts[1][0], V1(1));
    CHECK_FALSE(validate_complex(cl, broken).empty());
}

TEST_CASE("degree bounds along a weight functional") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    std::vector<Vec> gens = {V2(2, 0), V2(1, 1), V2(0, 2)};
    GradedComplex M = minimalize_complex(taylor_complex(cl, gens));
    Coarsening w = classify_coarsening(cl, V1(1));

    CHECK(check_degree_bounds(M, {w}, {Int(1)}).empty());

    auto viol = check_degree_bounds(M, {w}, {Int(0)});
    CHECK(viol.size() == 5); // three quadrics and two cubic syzygies
    for (const auto& v : viol) CHECK(v.lhs == v.rhs + 1);
}

TEST_CASE("polynomial helpers") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    Poly x = Poly::monomial(Rat(1), V2(1, 0));
    Poly y = Poly::monomial(Rat(1), V2(0, 1));
    Poly p = poly_add(poly_mul(x, x), poly_scale(Rat(-2), y));
    REQUIRE(p.terms.size() == 2);
    CHECK(p.terms.at(V2(2, 0)) == Rat(1));
    CHECK(p.terms.at(V2(0, 1)) == Rat(-2));
    CHECK(poly_str(cl, p) == poly_str(cl, p)); // deterministic rendering
}

TEST_CASE("generator caps are enforced") {
    Ring cl = load_ring_file(DATA + "/classical.ring");
    std::vector<Vec> many;
    for (long a = 1; a <= 17; ++a) many.push_back(V2(a, 18 - a));
    CHECK_THROWS_AS(taylor_complex(cl, many), CapExceeded);
}
