// End-to-end acceptance checks, one line per criterion. Exact arithmetic
// throughout: every comparison is an equality of integers or regions, with
// wall-clock limits where the behavior is meant to be cheap.
#include "multireg/coarsen.hpp"
#include "multireg/cohomology.hpp"
#include "multireg/family.hpp"
#include "multireg/region.hpp"
#include "multireg/resolution.hpp"
#include "multireg/ring.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif
#ifndef MULTIREG_CLI_PATH
#define MULTIREG_CLI_PATH "multireg"
#endif

using namespace multireg;

namespace {

const std::string DATA = MULTIREG_DATA_DIR;

Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }

Ring ring_file(const std::string& name) { return load_ring_file(DATA + "/" + name); }

std::string criterion1() {
    Ring cl = ring_file("classical.ring");
    CohCache coh(cl);
    Region regS = regS_region(coh, V1(-4), V1(4));
    if (!regS.exact || regS.gens != std::vector<Vec>{V1(0)})
        return "ring region is not N";
    for (long m : {-2L, 0L, 3L}) {
        TypeJ J;
        for (long p = 0; p <= 6; ++p) J.levels.push_back({V1(m + p)});
        Region R = reg_of_J(J, regS, cl.config);
        if (!R.exact || R.gens != std::vector<Vec>{V1(m)})
            return "reg(J) for m=" + std::to_string(m) + " is not m+N";
        Region D = make_region(cl.config, {V1(m)});
        for (long p = 0; p <= 6; ++p) {
            auto pts = dreg_in_box(D, regS, p, V1(m - 5), V1(m + 10));
            auto mx = maximal_in_cone_order(pts, cl.config);
            if (mx != std::vector<Vec>{V1(m + p)})
                return "degree set max for m=" + std::to_string(m) +
                       ", p=" + std::to_string(p) + " is not m+p";
        }
    }
    return "";
}

std::string criterion2() {
    struct Case {
        const char* file;
        long n, suma, bound;
    };
    const Case cases[] = {{"weighted_1_2.ring", 2, 3, 0},
                          {"weighted_1_1_2.ring", 3, 4, 1},
                          {"weighted_2_3_5.ring", 3, 10, 51}};
    for (const Case& cs : cases) {
        Ring w = ring_file(cs.file);
        CohCache coh(w);
        std::vector<Vec> S = {V1(0)};
        for (long t = 1; t <= 60; ++t) {
            PieceDim p = coh_free_piece(coh, S, (size_t)cs.n, V1(-cs.suma + t));
            if (!p.finite || p.dim != 0)
                return std::string(cs.file) + ": top cohomology alive above the socle";
        }
        PieceDim socle = coh_free_piece(coh, S, (size_t)cs.n, V1(-cs.suma));
        if (!socle.finite || socle.dim == 0)
            return std::string(cs.file) + ": socle degree is empty";
        Region reg = regS_region(coh, V1(cs.bound - 25), V1(cs.bound + 5));
        if (!region_member(reg, V1(cs.bound)))
            return std::string(cs.file) + ": region misses the degree bound";
        if (!region_member(reg, V1(cs.bound + 7)))
            return std::string(cs.file) + ": region is not upward closed from the bound";
    }
    return "";
}

std::string criterion3() {
    for (long t = 0; t <= 3; ++t) {
        Ring hz = ring_file("hirzebruch_t" + std::to_string(t) + ".ring");
        CohCache coh(hz);
        Region r = regS_region(coh, V2(-6, -6), V2(6, 6));
        if (!r.exact) return "t=" + std::to_string(t) + ": region not exact";
        VecSet got(r.gens.begin(), r.gens.end());
        VecSet want;
        if (t <= 1) {
            want.insert(V2(0, 0));
        } else {
            want.insert(V2(t - 1, 0));
            want.insert(V2(0, 1));
        }
        if (got != want) return "t=" + std::to_string(t) + ": wrong generators";
    }
    return "";
}

std::string criterion4() {
    for (const char* file : {"p1p1.ring", "p1p2.ring"}) {
        Ring ring = ring_file(file);
        IdealFamily fam = primitive_collections(ring);
        FamilyContext ctx(ring, fam);
        ModuleData S = ModuleData::free_module({V2(0, 0)});
        long n = (long)ring.nvars();
        for (unsigned mask = 1; mask <= ctx.full_mask(); ++mask) {
            Vec v = family_functional(fam, mask, ring.rank);
            CohCache& coh = ctx.cache_for(mask);
            std::vector<Vec> shifts = {V2(0, 0)};
            for (long i = 0; i <= n; ++i)
                for (const Vec& d : box_points(V2(-5, -5), V2(5, 5))) {
                    if (vec_dot(v, d) < Int(1 - i)) continue;
                    PieceDim p = coh_free_piece(coh, shifts, (size_t)i, d);
                    if (!p.finite || p.dim != 0) {
                        std::ostringstream os;
                        os << file << ": H^" << i << " of B_"
                           << family_mask_str(mask) << " alive at " << vec_str(d);
                        return os.str();
                    }
                }
        }
        for (const Vec& d : box_points(V2(-5, -5), V2(5, 5))) {
            bool inside = d[0] >= 0 && d[1] >= 0;
            FamilyAnswer a = regBv_membership(ctx, S, d);
            if (inside != (a.status == Mem::Yes))
                return std::string(file) +
                       ": coarse certificate does not match N^2 at " + vec_str(d);
        }
    }
    return "";
}

std::string criterion5() {
    Ring ring = ring_file("p1p1.ring");
    IdealFamily fam = primitive_collections(ring);
    FamilyContext ctx(ring, fam);
    std::vector<Coarsening> ws;
    for (unsigned mask = 1; mask <= ctx.full_mask(); ++mask)
        ws.push_back(classify_coarsening(ring, family_functional(fam, mask, ring.rank)));

    std::mt19937 rng(20260814);
    std::uniform_int_distribution<long> e(0, 2), ng(1, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Vec> gens;
        int k = (int)ng(rng);
        for (int t = 0; t < k; ++t) {
            Vec g(ring.nvars());
            bool zero = true;
            for (auto& x : g) {
                x = e(rng);
                if (x != 0) zero = false;
            }
            if (!zero) gens.push_back(g);
        }
        if (gens.empty()) gens.push_back(Vec(ring.nvars(), Int(1)));
        gens = minimalize_monomials(gens);

        GradedComplex F = minimalize_complex(taylor_complex(ring, gens));
        ModuleData M = ModuleData::from_type_J(extract_type_J(F));
        for (const Vec& p : box_points(V2(-2, -2), V2(5, 5))) {
            if (regBv_membership(ctx, M, p).status != Mem::Yes) continue;
            std::vector<Int> b;
            for (const Coarsening& w : ws) b.push_back(vec_dot(w.v, p));
            auto viol = check_degree_bounds(F, ws, b);
            if (!viol.empty()) {
                std::ostringstream os;
                os << "trial " << trial << ": certified degree " << vec_str(p)
                   << " but the resolution breaks its bound at level "
                   << viol[0].level;
                return os.str();
            }
        }
    }
    return "";
}

std::string criterion6() {
    struct Case {
        const char* file;
        long W;
        std::vector<std::vector<Vec>> modules;
    };
    std::vector<Case> cases;
    // The witness realizes each summand twist as a monomial submodule, so
    // every shift must be the degree of an actual monomial. The truncation
    // box must cover every fine degree that still carries cohomology; the
    // long fibers of the Hirzebruch grading need a wider box.
    cases.push_back({"classical.ring",
                     8,
                     {{V1(0)}, {V1(1)}, {V1(2), V1(0)}, {V1(3), V1(1)}}});
    cases.push_back({"p1p1.ring",
                     8,
                     {{V2(0, 0)},
                      {V2(1, 2)},
                      {V2(1, 0), V2(0, 1)},
                      {V2(2, 2), V2(0, 0)}}});
    cases.push_back({"hirzebruch_t2.ring",
                     12,
                     {{V2(0, 0)},
                      {V2(2, 1)},
                      {V2(-1, 1), V2(1, 0)},
                      {V2(1, 1), V2(-2, 1)}}});
    for (const Case& cs : cases) {
        Ring ring = ring_file(cs.file);
        CohCache coh(ring);
        Vec lo(ring.rank, Int(-3)), hi(ring.rank, Int(3));
        for (const auto& shifts : cs.modules)
            for (const Vec& d : box_points(lo, hi)) {
                OracleDim o = cech_oracle_piece(ring, shifts, d, cs.W);
                for (size_t i = 0; i < o.h.size(); ++i) {
                    PieceDim p = coh_free_piece(coh, shifts, i, d);
                    if (!p.finite || p.dim != o.h[i]) {
                        std::ostringstream os;
                        os << cs.file << ": witness disagrees at i=" << i
                           << " d=" << vec_str(d);
                        return os.str();
                    }
                }
            }
    }
    return "";
}

std::string criterion7() {
    for (const char* file : {"p1p1.ring", "p2p1.ring"}) {
        Ring ring = ring_file(file);
        IdealFamily fam = primitive_collections(ring);
        std::vector<std::vector<Vec>> ideals;
        for (size_t i = 0; i < fam.collections.size(); ++i)
            ideals.push_back(family_ideal(ring, fam, 1u << i));
        MVContext mv(ring, ideals);
        CohCache coh(ring);
        std::vector<Vec> S = {vec_zero(ring.rank)};
        long n = (long)ring.nvars();
        for (long i = 0; i <= n; ++i)
            for (const Vec& d : box_points(Vec(ring.rank, Int(-4)),
                                           Vec(ring.rank, Int(4)))) {
                if (!mv.vanishes(S, i, d)) continue;
                PieceDim p = coh_free_piece(coh, S, (size_t)i, d);
                if (!p.finite || p.dim != 0) {
                    std::ostringstream os;
                    os << file << ": unsound certificate at i=" << i
                       << " d=" << vec_str(d);
                    return os.str();
                }
            }
    }
    return "";
}

std::string criterion8() {
    std::string cmd = std::string(MULTIREG_CLI_PATH) + " selftest > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) return "selftest battery reported failures";
    return "";
}

struct Criterion {
    int number;
    std::string (*fn)();
    long limit_ms; // 0 = no limit
};

} // namespace

int main() {
    const Criterion list[] = {
        {1, criterion1, 1000},  {2, criterion2, 5000},  {3, criterion3, 30000},
        {4, criterion4, 60000}, {5, criterion5, 60000}, {6, criterion6, 0},
        {7, criterion7, 0},     {8, criterion8, 120000},
    };
    int failures = 0;
    for (const Criterion& c : list) {
        auto start = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.fn();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (err.empty() && c.limit_ms > 0 && ms > c.limit_ms)
            err = "exceeded " + std::to_string(c.limit_ms) + " ms";
        if (err.empty()) {
            std::cout << "criterion " << c.number << ": PASS (" << ms << " ms)\n";
        } else {
            std::cout << "criterion " << c.number << ": FAIL (" << ms
                      << " ms): " << err << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
