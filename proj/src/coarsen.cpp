#include "multireg/coarsen.hpp"

#include "multireg/semigroup.hpp"

#include <sstream>

namespace multireg {

namespace {

// Positive weights of w as rank-one columns, for numerical semigroup
// membership.
std::vector<Vec> weight_cols(const Coarsening& w) {
    std::vector<Vec> cols;
    for (int i : w.pos_vars) cols.push_back(Vec{w.var_deg[(size_t)i]});
    return cols;
}

Int tau(const Coarsening& w) {
    Int t = 0;
    for (int i : w.pos_vars) t -= w.var_deg[(size_t)i];
    return t;
}

// Violation threshold of one summand shift at cohomological index i: the
// coarse cohomology of the ring sits in degrees tau - N{weights}, shifted
// by the summand degree, and is probed by translates of (1-i)c.
Int threshold(const Coarsening& w, const Int& vshift, long i) {
    return vshift + tau(w) - (Int(1) - Int(i)) * w.c;
}

bool weights_member(const Coarsening& w, const Int& x) {
    if (x < 0) return false;
    MemberResult r = semigroup_member(weight_cols(w), Vec{x});
    if (r.status == Mem::Unknown)
        throw CapExceeded("weight semigroup membership budget");
    return r.status == Mem::Yes;
}

} // namespace

VregAnswer vreg_membership(const Ring& ring, const ModuleData& M,
                           const Coarsening& w, const Int& p) {
    (void)ring;
    VregAnswer ans;
    long n1 = (long)w.pos_vars.size();
    if (M.free) {
        for (const Vec& s : M.shifts) {
            Int X = threshold(w, vec_dot(w.v, s), (long)n1);
            if (weights_member(w, X - p)) {
                ans.status = Mem::No;
                std::ostringstream os;
                os << "coarse H^" << n1 << " nonzero on p + " << (1 - n1)
                   << "*c for the summand with shift " << vec_str(s);
                ans.note = os.str();
                return ans;
            }
        }
        ans.status = Mem::Yes;
        return ans;
    }
    ans.certified_only = true;
    for (long i = 0; i <= n1; ++i) {
        size_t lvl = (size_t)(n1 - i);
        if (lvl >= M.J.levels.size()) continue;
        for (const Vec& d : M.J.levels[lvl]) {
            Int X = threshold(w, vec_dot(w.v, d), i);
            if (weights_member(w, X - p)) {
                ans.status = Mem::No;
                std::ostringstream os;
                os << "vanishing not certified at index " << i
                   << " from the level-" << lvl << " twist " << vec_str(d);
                ans.note = os.str();
                return ans;
            }
        }
    }
    ans.status = Mem::Yes;
    ans.note = "certified via resolution twists (one-directional)";
    return ans;
}

Vregnum vregnum(const Ring& ring, const ModuleData& M, const Coarsening& w) {
    (void)ring;
    Vregnum out;
    long n1 = (long)w.pos_vars.size();
    bool any = false;
    Int best = 0;
    if (M.free) {
        for (const Vec& s : M.shifts) {
            Int X = threshold(w, vec_dot(w.v, s), n1) + 1;
            if (!any || X > best) best = X;
            any = true;
        }
    } else {
        out.upper_bound_only = true;
        for (long i = 0; i <= n1; ++i) {
            size_t lvl = (size_t)(n1 - i);
            if (lvl >= M.J.levels.size()) continue;
            for (const Vec& d : M.J.levels[lvl]) {
                Int X = threshold(w, vec_dot(w.v, d), i) + 1;
                if (!any || X > best) best = X;
                any = true;
            }
        }
    }
    if (!any) {
        out.minus_infinity = true;
        return out;
    }
    out.value = best;
    return out;
}

BstarAnswer bstar_regular(const Ring& ring, const ModuleData& M,
                          const std::vector<Coarsening>& ws,
                          const std::vector<Int>& b) {
    if (ws.size() != b.size())
        throw std::invalid_argument("bstar_regular: bounds count mismatch");
    BstarAnswer ans;
    ans.status = Mem::Yes;
    for (size_t k = 0; k < ws.size(); ++k) {
        Vregnum vn = vregnum(ring, M, ws[k]);
        ans.certified_only = ans.certified_only || vn.upper_bound_only;
        if (!vn.minus_infinity && vn.value > b[k]) {
            ans.status = Mem::No;
            ans.failures.push_back(
                "coarsening " + vec_str(ws[k].v) + ": regularity number " +
                vn.value.get_str() + " exceeds bound " + b[k].get_str());
        }
    }
    return ans;
}

// ---------------------------------------------------------------------------

HalfplaneReport halfplane_vanishes(CohCache& coh, const ModuleData& M,
                                   const Vec& v, const std::vector<Int>& thetas) {
    HalfplaneReport rep;
    rep.certified_only = !M.free;
    rep.all = true;
    for (size_t i = 0; i < thetas.size(); ++i) {
        HalfplaneLevel lv;
        lv.i = i;
        lv.ok = true;
        // pairs (coh index, v-degree of the twist) feeding index i
        std::vector<std::pair<size_t, Int>> probes;
        if (M.free) {
            for (const Vec& s : M.shifts) probes.push_back({i, vec_dot(v, s)});
        } else {
            for (size_t l = 0; l < M.J.levels.size(); ++l)
                for (const Vec& d : M.J.levels[l])
                    probes.push_back({i + l, vec_dot(v, d)});
        }
        for (const auto& [idx, vshift] : probes) {
            if (idx > coh.length()) continue;
            for (const SupportPiece& piece : coh.supports(idx)) {
                bool bounded = true;
                for (const Vec& f : piece.D)
                    if (vec_dot(v, f) > 0) bounded = false;
                Int top = vshift + vec_dot(v, piece.v);
                if (!bounded || top >= thetas[i]) {
                    lv.ok = false;
                    std::ostringstream os;
                    os << "index " << idx << ", sign pattern {";
                    for (size_t k = 0; k < piece.sigma.size(); ++k)
                        os << (k ? "," : "")
                           << coh.ring().var_names[(size_t)piece.sigma[k]];
                    os << "}: "
                       << (bounded ? "support reaches the halfplane"
                                   : "support unbounded along v");
                    lv.blocker = os.str();
                    break;
                }
            }
            if (!lv.ok) break;
        }
        rep.all = rep.all && lv.ok;
        rep.levels.push_back(std::move(lv));
    }
    return rep;
}

HalfplaneReport halfplane_implies_reg(CohCache& coh, const ModuleData& M,
                                      const Vec& m, const Vec& v, long k) {
    const std::vector<Vec>& C = coh.ring().config;
    Int minC, maxC;
    for (size_t j = 0; j < C.size(); ++j) {
        Int x = vec_dot(v, C[j]);
        if (j == 0) minC = maxC = x;
        if (x < minC) minC = x;
        if (x > maxC) maxC = x;
        if (x < 0) {
            HalfplaneReport rep;
            rep.applicable = false;
            rep.refusal = "functional is negative on cone generator " +
                          vec_str(C[j]);
            return rep;
        }
    }
    size_t top = coh.length();
    if (!M.free) top += M.J.levels.empty() ? 0 : M.J.levels.size() - 1;
    std::vector<Int> thetas;
    for (size_t i = 0; i <= top; ++i) {
        Int step = (k - (long)i) < 0 ? maxC : minC;
        thetas.push_back(vec_dot(v, m) + (Int(k) - Int((long)i)) * step);
    }
    return halfplane_vanishes(coh, M, v, thetas);
}

} // namespace multireg
