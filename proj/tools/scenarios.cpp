#include "cli_support.hpp"

#include "multireg/cohomology.hpp"
#include "multireg/family.hpp"
#include "multireg/region.hpp"
#include "multireg/ring.hpp"

#include <sstream>

using namespace multireg;

namespace multireg_cli {

namespace {

Vec V1(long a) { return Vec{Int(a)}; }
Vec V2(long a, long b) { return Vec{Int(a), Int(b)}; }

std::string mem_str(Mem m) {
    return m == Mem::Yes ? "yes" : m == Mem::No ? "no" : "unknown";
}

} // namespace

std::string region_line(const Region& R) {
    std::ostringstream os;
    os << "generators:";
    if (R.gens.empty()) os << " (none, empty region)";
    for (const Vec& g : R.gens) os << " " << vec_str(g);
    os << (R.exact ? " [exact]" : (" [" + R.note + "]"));
    return os.str();
}

std::string scenario_classical(const std::string& data_dir) {
    std::ostringstream os;
    Ring ring = load_ring_file(data_dir + "/classical.ring");
    CohCache coh(ring);
    Region regS = regS_region(coh, V1(-4), V1(4));
    os << "classical correspondence over k[x,y], B = (x,y), C = {1}\n";
    os << "ring regularity " << region_line(regS) << "\n";
    for (long m : {-2L, 0L, 3L}) {
        TypeJ J;
        for (long p = 0; p <= 6; ++p) J.levels.push_back({V1(m + p)});
        Region rj = reg_of_J(J, regS, ring.config);
        os << "m = " << m << "\n";
        os << "  twists J_p = {m+p}, p <= 6: reg(J) " << region_line(rj) << "\n";
        Region D = make_region(ring.config, {V1(m)});
        os << "  degree sets of D = m + N: maximal elements";
        for (long p = 0; p <= 6; ++p) {
            auto pts = dreg_in_box(D, regS, p, V1(m - 5), V1(m + 10));
            auto mx = maximal_in_cone_order(pts, ring.config);
            for (const Vec& x : mx) os << " " << vec_str(x);
        }
        os << "\n";
    }
    return os.str();
}

std::string scenario_weighted(const std::string& data_dir) {
    std::ostringstream os;
    struct Case {
        const char* file;
        long n;
    };
    os << "weighted projective spaces: top cohomology threshold and the\n";
    os << "regularity bound u >= (n-1)c - sum(a) + 1\n";
    for (Case cs : {Case{"weighted_1_2.ring", 2}, Case{"weighted_1_1_2.ring", 3},
                    Case{"weighted_2_3_5.ring", 3}}) {
        Ring ring = load_ring_file(data_dir + std::string("/") + cs.file);
        CohCache coh(ring);
        Int suma = 0, c = 1;
        for (const Vec& d : ring.var_degrees) {
            suma += d[0];
            c = lcm(c, d[0]);
        }
        os << cs.file << ": weights";
        for (const Vec& d : ring.var_degrees) os << " " << d[0];
        os << ", c = " << c << "\n";
        std::vector<Vec> S = {V1(0)};
        bool all_zero = true;
        for (Int w = -suma + 1; w <= -suma + 60; ++w) {
            PieceDim p = coh_free_piece(coh, S, (size_t)cs.n, {w});
            if (!p.finite || p.dim != 0) all_zero = false;
        }
        PieceDim at = coh_free_piece(coh, S, (size_t)cs.n, {Int(-suma)});
        os << "  H^" << cs.n << "(S)_w = 0 for the 60 degrees above -sum(a) = "
           << -suma << ": " << (all_zero ? "verified" : "FAILED") << "\n";
        os << "  H^" << cs.n << "(S) at -sum(a): dim = "
           << (at.finite ? at.dim.get_str() : "infinite") << "\n";
        Int bound = (cs.n - 1) * c - suma + 1;
        Region reg = regS_region(coh, {bound - 20}, {bound + 20});
        os << "  ring regularity " << region_line(reg) << "\n";
        os << "  contains the bound point u = " << bound << ": "
           << (region_member(reg, {bound}) ? "yes" : "NO") << "\n";
    }
    return os.str();
}

std::string scenario_products(const std::string& data_dir) {
    std::ostringstream os;
    os << "products of projective spaces: decomposition of B, orthogonal\n";
    os << "functionals, and certified regularity N^l\n";
    for (const char* file : {"p1p1.ring", "p1p2.ring"}) {
        Ring ring = load_ring_file(data_dir + std::string("/") + file);
        os << file << "\n";
        IdealFamily fam = primitive_collections(ring);
        for (size_t i = 0; i < fam.collections.size(); ++i) {
            os << "  P" << (i + 1) << " = {";
            for (size_t k = 0; k < fam.collections[i].size(); ++k)
                os << (k ? "," : "")
                   << ring.var_names[(size_t)fam.collections[i][k]];
            os << "}, v = " << (fam.v[i] ? vec_str(*fam.v[i]) : "(none)")
               << "\n";
        }
        FamilyContext ctx(ring, fam);
        ModuleData S = ModuleData::free_module({vec_zero(ring.rank)});

        // vanishing line per subfamily: H^i of B_I vanishes at d.v_I >= 1-i
        long checked = 0;
        bool ok = true;
        size_t n = ring.nvars();
        for (unsigned mask = 1; mask <= ctx.full_mask(); ++mask) {
            CohCache& coh = ctx.cache_for(mask);
            Vec vI = family_functional(fam, mask, ring.rank);
            for (const Vec& d : box_points(V2(-3, -3), V2(3, 3)))
                for (size_t i = 0; i <= n; ++i) {
                    if (vec_dot(vI, d) < Int(1) - Int((long)i)) continue;
                    PieceDim p = coh_free_piece(coh, S.shifts, i, d);
                    ++checked;
                    if (!p.finite || p.dim != 0) ok = false;
                }
        }
        os << "  H^i of each B_I vanishes when d.v_I >= 1-i on [-3,3]^2: "
           << (ok ? "verified" : "FAILED") << " (" << checked << " pieces)\n";

        // certified region equals N^l on a window
        bool match = true;
        for (const Vec& m : box_points(V2(-2, -2), V2(2, 2))) {
            bool want = true;
            for (const Int& x : m)
                if (x < 0) want = false;
            FamilyAnswer a = regBv_membership(ctx, S, m);
            if ((a.status == Mem::Yes) != want) match = false;
        }
        os << "  coarse-functional certificate on [-2,2]^2 equals N^2: "
           << (match ? "verified" : "FAILED") << "\n";
        FamilyAnswer a0 = regBv_membership(ctx, S, V2(0, 0));
        FamilyAnswer aneg = regBv_membership(ctx, S, V2(-1, 0));
        os << "  membership of (0,0): " << mem_str(a0.status)
           << "; of (-1,0): " << mem_str(aneg.status) << "\n";
    }
    return os.str();
}

std::string scenario_hirzebruch(const std::string& data_dir) {
    std::ostringstream os;
    os << "Hirzebruch surfaces: ring regularity and the decomposition of B\n";
    for (int t = 0; t <= 3; ++t) {
        std::string file =
            data_dir + "/hirzebruch_t" + std::to_string(t) + ".ring";
        Ring ring = load_ring_file(file);
        os << "t = " << t << ": degrees";
        for (const Vec& d : ring.var_degrees) os << " " << vec_str(d);
        os << "\n";
        CohCache coh(ring);
        Region reg = regS_region(coh, V2(-6, -6), V2(6, 6));
        os << "  ring regularity " << region_line(reg) << "\n";
        IdealFamily fam = primitive_collections(ring);
        os << "  primitive collections:";
        for (const auto& c : fam.collections) {
            os << " {";
            for (size_t k = 0; k < c.size(); ++k)
                os << (k ? "," : "") << ring.var_names[(size_t)c[k]];
            os << "}";
        }
        os << "\n";
        if (fam.orthogonal) {
            os << "  orthogonal functionals:";
            for (const auto& v : fam.v) os << " " << vec_str(*v);
            os << "\n";
        } else {
            os << "  no orthogonal functionals: " << fam.no_orthogonal_reason
               << "\n";
        }
    }
    return os.str();
}

} // namespace multireg_cli
