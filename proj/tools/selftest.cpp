#include "cli_support.hpp"

#include "multireg/cohomology.hpp"
#include "multireg/coarsen.hpp"
#include "multireg/family.hpp"
#include "multireg/region.hpp"
#include "multireg/resolution.hpp"
#include "multireg/ring.hpp"
#include "multireg/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

using namespace multireg;

namespace multireg_cli {

namespace {

Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }

struct Battery {
    std::string data;
    std::vector<Check> out;

    void run(const std::string& name, const std::function<std::string()>& f) {
        Check c;
        c.name = name;
        try {
            c.detail = f();
            c.pass = c.detail.empty();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        out.push_back(std::move(c));
    }

    Ring ring(const std::string& file) {
        return load_ring_file(data + "/" + file);
    }
};

std::string closed_under_cone(const Region& R) {
    for (const Vec& g : R.gens)
        for (const Vec& c : R.base)
            if (!region_member(R, vec_add(g, c)))
                return "region not closed at " + vec_str(vec_add(g, c));
    return "";
}

// Reachable set of the semigroup generated by gens, cut off at phi.x <= cap.
VecSet bfs_semigroup(const std::vector<Vec>& gens, const Vec& phi, long cap) {
    VecSet seen;
    std::vector<Vec> frontier = {vec_zero(phi.size())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& x : frontier)
            for (const Vec& g : gens) {
                Vec y = vec_add(x, g);
                if (vec_dot(phi, y) > cap) continue;
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    return seen;
}

long count_monomials_brute(const Ring& ring, const Vec& d) {
    // independent of fiber_solutions: plain recursion over variables with a
    // per-variable bound from the positivity functional
    long count = 0;
    size_t n = ring.nvars();
    std::function<void(size_t, Vec)> walk = [&](size_t k, Vec rest) {
        if (k == n) {
            if (vec_is_zero(rest)) ++count;
            return;
        }
        Int budget = vec_dot(ring.grading_phi, rest);
        Int w = vec_dot(ring.grading_phi, ring.var_degrees[k]);
        for (Int a = 0; a * w <= budget; ++a)
            walk(k + 1, vec_sub(rest, vec_scale(a, ring.var_degrees[k])));
    };
    if (vec_dot(ring.grading_phi, d) >= 0) walk(0, d);
    return count;
}

std::vector<Vec> radical_gens(std::vector<Vec> gens) {
    for (Vec& g : gens)
        for (Int& x : g) x = (x > 0) ? 1 : 0;
    return minimalize_monomials(std::move(gens));
}

std::vector<Vec> intersect_monomial(const std::vector<Vec>& A,
                                    const std::vector<Vec>& B) {
    std::vector<Vec> out;
    for (const Vec& a : A)
        for (const Vec& b : B) {
            Vec l(a.size());
            for (size_t i = 0; i < a.size(); ++i)
                l[i] = std::max(a[i], b[i]);
            out.push_back(std::move(l));
        }
    return minimalize_monomials(std::move(out));
}

std::string check_cone_recursion(Battery& B) {
    for (const char* file : {"classical.ring", "p1p1.ring", "hirzebruch_t2.ring"}) {
        Ring ring = B.ring(file);
        const auto& C = ring.config;
        Vec lo(ring.rank, Int(-4)), hi(ring.rank, Int(4));
        for (long k = -3; k <= 3; ++k) {
            Region prev = shifted_cone(C, k - 1);
            Region cur = shifted_cone(C, k);
            for (const Vec& x : box_points(lo, hi)) {
                bool in_prev = region_member(prev, x);
                if (k <= 0) {
                    bool any = false;
                    for (const Vec& c : C)
                        if (region_member(cur, vec_add(x, c))) any = true;
                    if (in_prev != any)
                        return std::string(file) + ": recursion fails at k=" +
                               std::to_string(k) + " x=" + vec_str(x);
                } else if (in_prev) {
                    for (const Vec& c : C)
                        if (!region_member(cur, vec_add(x, c)))
                            return std::string(file) +
                                   ": containment fails at k=" +
                                   std::to_string(k) + " x=" + vec_str(x);
                }
            }
        }
    }
    return "";
}

std::string check_cone_modules(Battery& B) {
    for (const char* file : {"classical.ring", "p1p1.ring", "hirzebruch_t2.ring"}) {
        Ring ring = B.ring(file);
        for (long j = -3; j <= 3; ++j) {
            std::string bad = closed_under_cone(shifted_cone(ring.config, j));
            if (!bad.empty())
                return std::string(file) + " j=" + std::to_string(j) + ": " + bad;
        }
    }
    return "";
}

std::string check_member_vs_bfs(Battery&) {
    {
        std::vector<Vec> gens = {V1(2), V1(3)};
        Vec phi = V1(1);
        VecSet reach = bfs_semigroup(gens, phi, 30);
        for (long d = -30; d <= 30; ++d) {
            Mem got = semigroup_member(gens, V1(d)).status;
            bool want = reach.count(V1(d)) > 0;
            if (got == Mem::Unknown || (got == Mem::Yes) != want)
                return "numerical semigroup mismatch at " + std::to_string(d);
        }
    }
    {
        std::vector<Vec> gens = {V2(1, 0), V2(-2, 1), V2(0, 1)};
        Pointedness p = check_pointed(gens);
        if (!p.pointed) return "expected pointed cone";
        VecSet reach = bfs_semigroup(gens, p.phi, 30);
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                Vec d = V2(a, b);
                Int v = vec_dot(p.phi, d);
                if (v > 30 || v < -30) continue;
                Mem got = semigroup_member(gens, d).status;
                bool want = reach.count(d) > 0;
                if (got == Mem::Unknown || (got == Mem::Yes) != want)
                    return "cone membership mismatch at " + vec_str(d);
            }
    }
    return "";
}

struct JD {
    TypeJ J;
    std::vector<Vec> D;
};

JD random_jd(std::mt19937& rng, size_t rank) {
    std::uniform_int_distribution<long> coord(-2, 3), nlev(1, 3), ngen(1, 2),
        ndg(1, 3);
    JD r;
    long L = nlev(rng);
    for (long p = 0; p < L; ++p) {
        std::vector<Vec> lvl;
        long k = ngen(rng);
        for (long t = 0; t < k; ++t) {
            Vec v(rank);
            for (auto& x : v) x = coord(rng);
            lvl.push_back(v);
        }
        r.J.levels.push_back(lvl);
    }
    long k = ndg(rng);
    for (long t = 0; t < k; ++t) {
        Vec v(rank);
        for (auto& x : v) x = coord(rng);
        r.D.push_back(v);
    }
    return r;
}

std::string check_correspondence(Battery& B) {
    std::mt19937 rng(20240814);
    for (const char* file : {"classical.ring", "p1p1.ring"}) {
        Ring ring = B.ring(file);
        CohCache coh(ring);
        Vec lo(ring.rank, Int(-4)), hi(ring.rank, Int(4));
        Region regS = regS_region(coh, lo, hi);
        if (!regS.exact) return std::string(file) + ": regS not exact";
        std::uniform_int_distribution<long> coord(-2, 3);
        for (int trial = 0; trial < 20; ++trial) {
            JD jd = random_jd(rng, ring.rank);
            Region RJ = reg_of_J(jd.J, regS, ring.config);
            std::string bad = closed_under_cone(RJ);
            if (!bad.empty()) return std::string(file) + ": reg(J) " + bad;

            // (1) enlarging J levelwise shrinks reg(J)
            TypeJ J2 = jd.J;
            for (auto& lvl : J2.levels) {
                Vec v(ring.rank);
                for (auto& x : v) x = coord(rng);
                lvl.push_back(v);
            }
            Region RJ2 = reg_of_J(J2, regS, ring.config);
            for (const Vec& x : box_points(lo, hi))
                if (region_member(RJ2, x) && !region_member(RJ, x))
                    return std::string(file) + ": (1) fails at " + vec_str(x);

            // (2) enlarging D shrinks the degree sets
            Region D = make_region(ring.config, jd.D);
            std::vector<Vec> dplus = jd.D;
            {
                Vec v(ring.rank);
                for (auto& x : v) x = coord(rng);
                dplus.push_back(v);
            }
            Region D2 = make_region(ring.config, dplus);
            for (long p = 0; p <= 2; ++p)
                for (const Vec& x : box_points(lo, hi))
                    if (dreg_member(D2, regS, p, x) &&
                        !dreg_member(D, regS, p, x))
                        return std::string(file) + ": (2) fails at " + vec_str(x);

            // (3) each twist lands in its own degree set
            for (size_t p = 0; p < jd.J.levels.size(); ++p)
                for (const Vec& d : jd.J.levels[p])
                    if (!RJ.empty() &&
                        !dreg_member(RJ, regS, (long)p, d))
                        return std::string(file) + ": (3) fails at " + vec_str(d);

            // (4) twists chosen inside the degree sets of D recover D
            TypeJ JofD;
            bool usable = true;
            for (long p = 0; p <= 2; ++p) {
                auto pts = dreg_in_box(D, regS, p, lo, hi);
                if (pts.empty()) {
                    usable = (p > 0);
                    break;
                }
                auto mx = maximal_in_cone_order(pts, ring.config);
                JofD.levels.push_back(mx);
            }
            if (usable && !JofD.levels.empty()) {
                Region R4 = reg_of_J(JofD, regS, ring.config);
                for (const Vec& g : jd.D)
                    if (!region_member(R4, g))
                        return std::string(file) + ": (4) fails at " + vec_str(g);
            }
        }
    }
    return "";
}

std::string check_level_split(Battery& B) {
    std::mt19937 rng(777);
    for (const char* file : {"classical.ring", "p1p1.ring"}) {
        Ring ring = B.ring(file);
        CohCache coh(ring);
        Vec lo(ring.rank, Int(-4)), hi(ring.rank, Int(4));
        Region regS = regS_region(coh, lo, hi);
        for (int trial = 0; trial < 6; ++trial) {
            JD jd = random_jd(rng, ring.rank);
            Region whole = reg_of_J(jd.J, regS, ring.config);
            Region l0 = reg_of_J_level(jd.J, regS, ring.config, 0);
            Region l1 = reg_of_J_level(jd.J, regS, ring.config, 1);
            for (const Vec& x : box_points(lo, hi)) {
                bool a = region_member(whole, x);
                bool b = region_member(l0, x) && region_member(l1, x);
                if (a != b)
                    return std::string(file) + ": split differs at " + vec_str(x);
            }
        }
    }
    return "";
}

std::string check_dreg_closure(Battery& B) {
    Ring ring = B.ring("p1p1.ring");
    CohCache coh(ring);
    Vec lo = V2(-4, -4), hi = V2(4, 4);
    Region regS = regS_region(coh, lo, hi);
    std::vector<Vec> gens = {V2(1, 0), V2(-1, 2)};
    Region D = make_region(ring.config, gens);
    std::vector<Vec> closed = gens;
    for (const Vec& g : gens)
        for (const Vec& c : ring.config) closed.push_back(vec_add(g, c));
    Region Dc = make_region(ring.config, closed);
    for (long p = 0; p <= 2; ++p)
        for (const Vec& x : box_points(lo, hi))
            if (dreg_member(D, regS, p, x) != dreg_member(Dc, regS, p, x))
                return "closure changes degree set at " + vec_str(x);
    return "";
}

std::string check_monomial_count(Battery& B) {
    {
        Ring ring = B.ring("weighted_2_3_5.ring");
        for (long d = 0; d <= 12; ++d) {
            auto ms = monomials_of_degree(ring, V1(d), 100000);
            if ((long)ms.size() != count_monomials_brute(ring, V1(d)))
                return "weighted count differs at " + std::to_string(d);
        }
    }
    {
        Ring ring = B.ring("p1p1.ring");
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                auto ms = monomials_of_degree(ring, V2(a, b), 100000);
                if ((long)ms.size() != (a + 1) * (b + 1))
                    return "product count differs at " + vec_str(V2(a, b));
            }
    }
    return "";
}

std::string check_coarsening_constants(Battery& B) {
    struct Case {
        const char* file;
        Vec v;
    };
    for (Case cs : {Case{"p1p1.ring", V2(1, 1)}, Case{"hirzebruch_t2.ring", V2(1, 2)},
                    Case{"weighted_2_3_5.ring", V1(1)}}) {
        Ring ring = B.ring(cs.file);
        Coarsening w = classify_coarsening(ring, cs.v);
        Int l = 1;
        for (int k : w.pos_vars) l = lcm(l, w.var_deg[(size_t)k]);
        if (l != w.c) return std::string(cs.file) + ": c is not the lcm";
        for (int k : w.pos_vars)
            if (w.c % w.var_deg[(size_t)k] != 0)
                return std::string(cs.file) + ": c not divisible by a weight";
    }
    return "";
}

std::string check_shift_identity(Battery& B) {
    for (const char* file : {"classical.ring", "p1p1.ring"}) {
        Ring ring = B.ring(file);
        CohCache coh(ring);
        std::vector<Vec> shifts;
        if (ring.rank == 1)
            shifts = {V1(2), V1(-1)};
        else
            shifts = {V2(1, 2), V2(-1, 0)};
        Vec lo(ring.rank, Int(-3)), hi(ring.rank, Int(3));
        for (const Vec& e : shifts)
            for (const Vec& d : box_points(lo, hi))
                for (size_t i = 0; i <= coh.length(); ++i) {
                    PieceDim a = coh_free_piece(coh, {e}, i, d);
                    PieceDim b = coh_free_piece(coh, {vec_zero(ring.rank)}, i,
                                                vec_sub(d, e));
                    if (a.finite != b.finite || a.dim != b.dim)
                        return std::string(file) + ": shift identity fails at " +
                               vec_str(d);
                }
    }
    return "";
}

std::string check_standard_regularity(Battery& B) {
    Ring ring = B.ring("p2.ring");
    CohCache coh(ring);
    Region reg = regS_region(coh, V1(-4), V1(4));
    if (!reg.exact) return "not exact";
    if (reg.gens.size() != 1 || reg.gens[0] != V1(0))
        return "expected a single generator 0, got " + vecs_str(reg.gens);
    return "";
}

std::string check_mv_soundness(Battery& B) {
    std::vector<std::string> files = {"p1p1.ring", "hirzebruch_t0.ring",
                                      "hirzebruch_t1.ring", "hirzebruch_t2.ring",
                                      "hirzebruch_t3.ring"};
    for (const auto& file : files) {
        Ring ring = B.ring(file);
        IdealFamily fam = primitive_collections(ring);
        std::vector<std::vector<Vec>> ideals;
        for (size_t i = 0; i < fam.collections.size(); ++i)
            ideals.push_back(family_ideal(ring, fam, 1u << i));
        MVContext mv(ring, ideals);
        CohCache direct(ring);
        std::vector<Vec> S = {vec_zero(ring.rank)};
        for (long i = 0; i <= 4; ++i)
            for (const Vec& d : box_points(V2(-3, -3), V2(3, 3)))
                if (mv.vanishes(S, i, d)) {
                    PieceDim p = coh_free_piece(direct, S, (size_t)i, d);
                    if (!p.finite || p.dim != 0)
                        return file + ": unsound certificate at i=" +
                               std::to_string(i) + " d=" + vec_str(d);
                }
    }
    return "";
}

std::vector<Vec> random_ideal(std::mt19937& rng, size_t nvars, int maxg) {
    std::uniform_int_distribution<long> e(0, 2), ng(1, maxg);
    std::vector<Vec> gens;
    int k = (int)ng(rng);
    for (int t = 0; t < k; ++t) {
        Vec g(nvars);
        bool zero = true;
        for (auto& x : g) {
            x = e(rng);
            if (x != 0) zero = false;
        }
        if (!zero) gens.push_back(g);
    }
    if (gens.empty()) gens.push_back(Vec(nvars, Int(1)));
    return minimalize_monomials(gens);
}

std::string check_resolution_basics(Battery& B) {
    Ring ring = B.ring("p1p1.ring");
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vec> gens = random_ideal(rng, ring.nvars(), 4);
        GradedComplex T = taylor_complex(ring, gens);
        auto p1 = validate_complex(ring, T);
        if (!p1.empty()) return "taylor invalid: " + p1[0];
        GradedComplex M = minimalize_complex(T);
        auto p2 = validate_complex(ring, M);
        if (!p2.empty()) return "minimal invalid: " + p2[0];
        GradedComplex M2 = minimalize_complex(M);
        if (M2.shifts != M.shifts) return "minimalization not idempotent";

        // permutation invariance of the twist multisets
        std::vector<Vec> perm = gens;
        std::reverse(perm.begin(), perm.end());
        GradedComplex Mp = minimalize_complex(taylor_complex(ring, perm));
        TypeJ a = extract_type_J(M), b = extract_type_J(Mp);
        if (a.levels.size() != b.levels.size())
            return "permuted input changes the number of levels";
        for (size_t p = 0; p < a.levels.size(); ++p) {
            auto x = a.levels[p], y = b.levels[p];
            std::sort(x.begin(), x.end(), VecLess{});
            std::sort(y.begin(), y.end(), VecLess{});
            if (x != y) return "permuted input changes the twists";
        }
    }
    return "";
}

std::string check_classical_bounds(Battery& B) {
    Ring ring = B.ring("classical.ring");
    for (long m = 1; m <= 3; ++m) {
        std::vector<Vec> gens;
        for (long a = 0; a <= m; ++a) gens.push_back(V2(a, m - a));
        GradedComplex M = minimalize_complex(taylor_complex(ring, gens));
        Coarsening w = classify_coarsening(ring, V1(1));
        auto viol = check_degree_bounds(M, {w}, {Int(m)});
        if (!viol.empty())
            return "power " + std::to_string(m) + " violates its bound";
    }
    return "";
}

std::string check_hilbert(Battery& B) {
    std::mt19937 rng(99);
    for (const char* file : {"classical.ring", "p1p1.ring"}) {
        Ring ring = B.ring(file);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<Vec> gens = random_ideal(rng, ring.nvars(), 3);
            GradedComplex M = minimalize_complex(taylor_complex(ring, gens));
            TypeJ J = extract_type_J(M);
            Vec lo(ring.rank, Int(0)), hi(ring.rank, Int(4));
            for (const Vec& e : box_points(lo, hi)) {
                // direct count of monomials of S/I
                long direct = 0;
                for (const Vec& mno : monomials_of_degree(ring, e, 100000)) {
                    bool in_ideal = false;
                    for (const Vec& g : gens)
                        if (divides(g, mno)) in_ideal = true;
                    if (!in_ideal) ++direct;
                }
                // Euler characteristic from the twist data
                Int chi = 0;
                long sign = 1;
                for (const auto& lvl : J.levels) {
                    for (const Vec& d : lvl) {
                        Vec rest = vec_sub(e, d);
                        chi += Int(sign) *
                               Int((long)monomials_of_degree(ring, rest, 100000)
                                       .size());
                    }
                    sign = -sign;
                }
                if (chi != direct)
                    return std::string(file) + ": Hilbert mismatch at " +
                           vec_str(e);
            }
        }
    }
    return "";
}

std::string check_coarse_containment(Battery& B) {
    struct Case {
        const char* file;
        Vec v;
    };
    for (Case cs : {Case{"p1p1.ring", V2(1, 1)}, Case{"hirzebruch_t2.ring", V2(1, 2)}}) {
        Ring ring = B.ring(cs.file);
        const auto& C = ring.config;
        Int lo = vec_dot(cs.v, C[0]), hi = lo;
        for (const Vec& c : C) {
            Int d = vec_dot(cs.v, c);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        for (long k = -3; k <= 3; ++k) {
            Region R = shifted_cone(C, k);
            Int bound = (k >= 0) ? Int(k) * lo : Int(k) * hi;
            for (const Vec& g : R.gens) {
                // sample deeper points of the region as well
                std::vector<Vec> pts = {g};
                for (const Vec& c : C) pts.push_back(vec_add(g, c));
                for (const Vec& x : pts)
                    if (vec_dot(cs.v, x) < bound)
                        return std::string(cs.file) + ": k=" + std::to_string(k) +
                               " point " + vec_str(x) + " below bound";
            }
        }
    }
    return "";
}

std::string check_vregnum_monotone(Battery& B) {
    for (const char* file : {"weighted_1_2.ring", "p1p1.ring"}) {
        Ring ring = B.ring(file);
        ModuleData S = ModuleData::free_module({vec_zero(ring.rank)});
        Vec v(ring.rank, Int(1));
        Coarsening w = classify_coarsening(ring, v);
        Vregnum vn = vregnum(ring, S, w);
        if (vn.minus_infinity) return std::string(file) + ": unexpected -inf";
        for (Int q = vn.value; q <= vn.value + 10; ++q) {
            VregAnswer a = vreg_membership(ring, S, w, q);
            if (a.status != Mem::Yes)
                return std::string(file) + ": not regular at " + q.get_str();
        }
        if (vreg_membership(ring, S, w, vn.value - 1).status == Mem::Yes)
            return std::string(file) + ": vregnum not least";
    }
    return "";
}

std::string check_vregnum_shift(Battery& B) {
    Ring ring = B.ring("p1p1.ring");
    Vec v = V2(1, 1);
    Coarsening w = classify_coarsening(ring, v);
    ModuleData S = ModuleData::free_module({vec_zero(ring.rank)});
    Vregnum base = vregnum(ring, S, w);
    for (const Vec& e : {V2(1, 0), V2(2, 3)}) {
        ModuleData Se = ModuleData::free_module({e});
        Vregnum vs = vregnum(ring, Se, w);
        if (vs.minus_infinity || base.minus_infinity)
            return "unexpected -inf";
        if (vs.value != base.value + vec_dot(v, e))
            return "shift covariance fails at " + vec_str(e);
    }
    return "";
}

std::string check_family_chain(Battery& B) {
    for (const char* file : {"p1p1.ring", "p2.ring", "p1p2.ring"}) {
        Ring ring = B.ring(file);
        IdealFamily fam = primitive_collections(ring);
        FamilyContext ctx(ring, fam);
        CohCache full(ring);
        ModuleData S = ModuleData::free_module({vec_zero(ring.rank)});
        Vec lo(ring.rank, Int(-2)), hi(ring.rank, Int(2));
        for (const Vec& m : box_points(lo, hi)) {
            FamilyAnswer bv = regBv_membership(ctx, S, m);
            FamilyAnswer star = regstar_membership(ctx, S, m);
            RegAnswer plain = regS_membership(full, m);
            if (bv.status == Mem::Yes && star.status != Mem::Yes)
                return std::string(file) + ": coarse certificate outside the family region at " +
                       vec_str(m);
            if (star.status == Mem::Yes && plain.status != Mem::Yes)
                return std::string(file) + ": family region outside the plain region at " +
                       vec_str(m);
            if (fam.collections.size() == 1 &&
                (star.status == Mem::Yes) != (plain.status == Mem::Yes))
                return std::string(file) + ": single-collection family differs from plain at " +
                       vec_str(m);
        }
    }
    return "";
}

std::string check_primitive_verified(Battery& B) {
    for (const char* file :
         {"p1p1.ring", "p1p2.ring", "p2p1.ring", "p2.ring", "hirzebruch_t1.ring"}) {
        Ring ring = B.ring(file);
        IdealFamily fam = primitive_collections(ring);
        if (fam.collections.empty()) return std::string(file) + ": no collections";
        auto in_cone = [&](const std::vector<int>& s) {
            for (const auto& cone : ring.fan_cones) {
                bool all = true;
                for (int k : s)
                    if (std::find(cone.begin(), cone.end(), k) == cone.end())
                       all = false;
                if (all) return true;
            }
            return false;
        };
        for (const auto& P : fam.collections) {
            if (in_cone(P))
                return std::string(file) + ": collection lies in a cone";
            // every proper subset, not only the maximal ones
            for (unsigned s = 0; s + 1 < (1u << P.size()); ++s) {
                std::vector<int> sub;
                for (size_t k = 0; k < P.size(); ++k)
                    if (s & (1u << k)) sub.push_back(P[k]);
                if (!in_cone(sub))
                    return std::string(file) + ": proper subset misses all cones";
            }
        }
    }
    return "";
}

std::string check_product_orthogonal(Battery& B) {
    for (const char* file : {"p1p1.ring", "p1p2.ring", "p2p1.ring"}) {
        Ring ring = B.ring(file);
        IdealFamily fam = primitive_collections(ring);
        std::string err = validate_orthogonality(ring, fam);
        if (!err.empty()) return std::string(file) + ": " + err;
    }
    return "";
}

std::string check_emitted_regions(Battery& B) {
    for (const char* file : {"classical.ring", "p2.ring", "weighted_1_2.ring",
                             "hirzebruch_t0.ring", "hirzebruch_t2.ring",
                             "hirzebruch_t3.ring"}) {
        Ring ring = B.ring(file);
        CohCache coh(ring);
        Vec lo(ring.rank, Int(-6)), hi(ring.rank, Int(6));
        Region reg = regS_region(coh, lo, hi);
        std::string bad = closed_under_cone(reg);
        if (!bad.empty()) return std::string(file) + ": " + bad;
    }
    return "";
}

std::string check_radical_decomposition(Battery& B) {
    for (const char* file : {"p1p1.ring", "p2.ring", "hirzebruch_t2.ring", "p1p2.ring"}) {
        Ring ring = B.ring(file);
        IdealFamily fam = primitive_collections(ring);
        std::vector<Vec> inter;
        for (size_t i = 0; i < fam.collections.size(); ++i) {
            std::vector<Vec> Bi = family_ideal(ring, fam, 1u << i);
            inter = i ? intersect_monomial(inter, Bi) : Bi;
        }
        std::vector<Vec> radB = radical_gens(ring.ideal);
        std::sort(inter.begin(), inter.end(), VecLess{});
        std::sort(radB.begin(), radB.end(), VecLess{});
        if (inter != radB)
            return std::string(file) + ": radical of B differs from the intersection";
    }
    return "";
}

} // namespace

std::vector<Check> run_selftest(const std::string& data_dir) {
    Battery B;
    B.data = data_dir;
    B.run("cone shift recursion", [&] { return check_cone_recursion(B); });
    B.run("shifted regions are cone modules", [&] { return check_cone_modules(B); });
    B.run("membership vs breadth-first oracle", [&] { return check_member_vs_bfs(B); });
    B.run("twist data correspondence", [&] { return check_correspondence(B); });
    B.run("level split of reg(J)", [&] { return check_level_split(B); });
    B.run("degree sets ignore closure generators", [&] { return check_dreg_closure(B); });
    B.run("monomial counting", [&] { return check_monomial_count(B); });
    B.run("coarsening constants", [&] { return check_coarsening_constants(B); });
    B.run("twist shift identity", [&] { return check_shift_identity(B); });
    B.run("standard grading regularity", [&] { return check_standard_regularity(B); });
    B.run("intersection certificate soundness", [&] { return check_mv_soundness(B); });
    B.run("resolution validity and idempotence", [&] { return check_resolution_basics(B); });
    B.run("classical twist bounds", [&] { return check_classical_bounds(B); });
    B.run("Hilbert function consistency", [&] { return check_hilbert(B); });
    B.run("coarse containment of shifted cones", [&] { return check_coarse_containment(B); });
    B.run("coarse regularity number monotone", [&] { return check_vregnum_monotone(B); });
    B.run("coarse regularity number shift", [&] { return check_vregnum_shift(B); });
    B.run("family certificates form a chain", [&] { return check_family_chain(B); });
    B.run("primitive collections verified", [&] { return check_primitive_verified(B); });
    B.run("product functionals orthogonal", [&] { return check_product_orthogonal(B); });
    B.run("emitted regions are cone modules", [&] { return check_emitted_regions(B); });
    B.run("radical decomposition of B", [&] { return check_radical_decomposition(B); });
    return B.out;
}

} // namespace multireg_cli
