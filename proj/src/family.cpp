#include "multireg/family.hpp"

#include "multireg/lp.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace multireg {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

unsigned set_mask(const std::vector<int>& vars) {
    unsigned m = 0;
    for (int k : vars) m |= 1u << (unsigned)k;
    return m;
}

bool inside_some_cone(unsigned s, const std::vector<unsigned>& cones) {
    for (unsigned c : cones)
        if ((s & ~c) == 0) return true;
    return false;
}

std::string vars_str(const Ring& ring, const std::vector<int>& vars) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < vars.size(); ++k)
        os << (k ? "," : "") << ring.var_names[(size_t)vars[k]];
    os << ")";
    return os.str();
}

// A functional positive exactly on the collection's variables. Try the
// product-type system v.deg = 1 on the collection first, then relax to
// v.deg >= 1; both keep v.deg = 0 off the collection. Solutions are scaled
// to integers (positive scaling preserves both conditions).
std::optional<Vec> collection_functional(const Ring& ring,
                                         const std::vector<int>& vars) {
    size_t r = ring.rank, n = ring.nvars();
    std::vector<char> in(n, 0);
    for (int k : vars) in[(size_t)k] = 1;
    for (int relax = 0; relax < 2; ++relax) {
        size_t cols = 2 * r + (relax ? vars.size() : 0);
        std::vector<QVec> A(n, QVec(cols, Rat(0)));
        QVec b(n, Rat(0));
        QVec c(cols, Rat(0));
        size_t snext = 2 * r; // v is free: v = x[0..r) - x[r..2r), then surpluses
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < r; ++k) {
                A[j][k] = Rat(ring.var_degrees[j][k]);
                A[j][r + k] = -A[j][k];
            }
            if (in[j]) {
                b[j] = 1;
                if (relax) A[j][snext++] = -1;
            }
        }
        LpResult res = lp_solve(A, b, c);
        if (res.status != LpStatus::Optimal) continue;
        QVec vq(r);
        Int den = 1;
        for (size_t k = 0; k < r; ++k) {
            vq[k] = res.x[k] - res.x[r + k];
            den = lcm(den, Int(vq[k].get_den()));
        }
        Vec v(r);
        Int g = 0;
        for (size_t k = 0; k < r; ++k) {
            Rat scaled = vq[k] * Rat(den);
            v[k] = scaled.get_num();
            g = gcd(g, v[k]);
        }
        if (g > 1)
            for (auto& x : v) x /= g;
        return v;
    }
    return std::nullopt;
}

} // namespace

IdealFamily primitive_collections(const Ring& ring) {
    size_t n = ring.nvars();
    if (ring.fan_cones.empty())
        throw std::invalid_argument(
            "primitive_collections: the ring spec has no fan_cone lines");
    if (n > 20)
        throw CapExceeded("primitive_collections: more than 20 rays");
    std::vector<unsigned> cones;
    cones.reserve(ring.fan_cones.size());
    for (const auto& cone : ring.fan_cones) cones.push_back(set_mask(cone));

    // A subset is primitive when it lies in no cone but each maximal proper
    // subset does. Cone ray sets are closed under taking subsets, so the
    // maximal proper subsets settle every proper subset at once.
    std::vector<unsigned> prim;
    for (unsigned s = 1; s < (1u << n); ++s) {
        if (inside_some_cone(s, cones)) continue;
        bool ok = true;
        for (size_t k = 0; k < n && ok; ++k)
            if (s & (1u << k)) ok = inside_some_cone(s & ~(1u << k), cones);
        if (ok) prim.push_back(s);
    }
    std::sort(prim.begin(), prim.end(), [](unsigned a, unsigned b) {
        int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    IdealFamily fam;
    for (unsigned s : prim) {
        std::vector<int> vars;
        for (size_t k = 0; k < n; ++k)
            if (s & (1u << k)) vars.push_back((int)k);
        fam.collections.push_back(std::move(vars));
    }
    fam.orthogonal = true;
    for (const auto& vars : fam.collections) {
        fam.v.push_back(collection_functional(ring, vars));
        if (!fam.v.back() && fam.orthogonal) {
            fam.orthogonal = false;
            fam.no_orthogonal_reason =
                "no functional is positive on " + vars_str(ring, vars) +
                " and zero on the other variables";
        }
    }
    return fam;
}

std::string validate_orthogonality(const Ring& ring, const IdealFamily& fam) {
    if (fam.v.size() != fam.collections.size())
        return "family carries " + std::to_string(fam.v.size()) +
               " functionals for " + std::to_string(fam.collections.size()) +
               " collections";
    for (size_t i = 0; i < fam.collections.size(); ++i) {
        std::string tag = "functional of P" + std::to_string(i + 1);
        if (!fam.v[i]) return tag + " is missing";
        const Vec& v = *fam.v[i];
        if (v.size() != ring.rank) return tag + " has the wrong rank";
        std::vector<char> in(ring.nvars(), 0);
        for (int k : fam.collections[i]) in[(size_t)k] = 1;
        for (size_t j = 0; j < ring.nvars(); ++j) {
            Int d = vec_dot(v, ring.var_degrees[j]);
            if (in[j] && d <= 0)
                return tag + " is not positive on " + ring.var_names[j];
            if (!in[j] && d != 0)
                return tag + " is nonzero on " + ring.var_names[j];
        }
    }
    return "";
}

std::vector<int> family_union_vars(const IdealFamily& fam, unsigned mask) {
    std::vector<int> vars;
    for (size_t i = 0; i < fam.collections.size(); ++i)
        if (mask & (1u << i))
            vars.insert(vars.end(), fam.collections[i].begin(),
                        fam.collections[i].end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

std::vector<Vec> family_ideal(const Ring& ring, const IdealFamily& fam,
                              unsigned mask) {
    std::vector<Vec> gens;
    for (int k : family_union_vars(fam, mask)) {
        Vec e = vec_zero(ring.nvars());
        e[(size_t)k] = 1;
        gens.push_back(std::move(e));
    }
    return gens;
}

Vec family_functional(const IdealFamily& fam, unsigned mask, size_t rank) {
    Vec v = vec_zero(rank);
    for (size_t i = 0; i < fam.collections.size(); ++i) {
        if (!(mask & (1u << i))) continue;
        if (!fam.v[i])
            throw std::invalid_argument(
                "family_functional: collection P" + std::to_string(i + 1) +
                " has no coarsening functional");
        v = vec_add(v, *fam.v[i]);
    }
    return v;
}

std::string family_mask_str(unsigned mask) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (size_t i = 0; mask >> i; ++i)
        if (mask & (1u << i)) {
            os << (first ? "" : ",") << "P" << (i + 1);
            first = false;
        }
    os << "}";
    return os.str();
}

FamilyContext::FamilyContext(const Ring& ring, IdealFamily fam)
    : ring_(&ring), fam_(std::move(fam)) {
    if (fam_.collections.size() > 16)
        throw CapExceeded("FamilyContext: more than 16 collections");
    for (auto& vars : fam_.collections) {
        if (vars.empty())
            throw std::invalid_argument("FamilyContext: empty collection");
        std::sort(vars.begin(), vars.end());
        if ((size_t)vars.back() >= ring.nvars() || vars.front() < 0)
            throw std::invalid_argument(
                "FamilyContext: collection index out of range");
    }
    if (fam_.v.size() < fam_.collections.size())
        fam_.v.resize(fam_.collections.size());
}

CohCache& FamilyContext::cache_for(unsigned mask) {
    auto it = caches_.find(mask);
    if (it != caches_.end()) return it->second;
    return caches_
        .emplace(mask, CohCache(*ring_, family_ideal(*ring_, fam_, mask)))
        .first->second;
}

FamilyAnswer regstar_membership(FamilyContext& ctx, const ModuleData& M,
                                const Vec& m) {
    const Ring& ring = ctx.ring();
    if (m.size() != ring.rank)
        throw std::invalid_argument("degree vector rank mismatch");
    FamilyAnswer ans;
    ans.certified_only = !M.free;
    bool pending = false;
    std::string pending_detail;
    for (unsigned mask = 1; mask <= ctx.full_mask() && mask != 0; ++mask) {
        CohCache& coh = ctx.cache_for(mask);
        long cnt = popcount(mask);
        for (long idx = cnt - 1; idx <= (long)coh.length(); ++idx) {
            long i = idx - (cnt - 1);
            long j = 1 - i;
            Mem r = Mem::Yes;
            if (M.free) {
                r = translates_avoid_support(coh, (size_t)idx, j, m, M.shifts);
            } else {
                for (size_t ell = 0; ell < M.J.levels.size(); ++ell) {
                    if (M.J.levels[ell].empty()) continue;
                    Mem q = translates_avoid_support(coh, (size_t)idx + ell, j,
                                                     m, M.J.levels[ell]);
                    if (q == Mem::No) {
                        r = Mem::No;
                        break;
                    }
                    if (q == Mem::Unknown) r = Mem::Unknown;
                }
            }
            if (r == Mem::No && M.free) {
                // exact supports: the obstruction is definite
                std::ostringstream os;
                os << "subfamily " << family_mask_str(mask) << ": H^" << idx
                   << " of the sum ideal meets m + translates at i = " << i;
                ans.status = Mem::No;
                ans.detail = os.str();
                return ans;
            }
            if (r == Mem::No) {
                // resolution input over-approximates the support, so a
                // failed probe is only an absent certificate
                r = Mem::Unknown;
            }
            if (r == Mem::Unknown && !pending) {
                pending = true;
                std::ostringstream os;
                os << "subfamily " << family_mask_str(mask)
                   << ": membership undecided at i = " << i;
                pending_detail = os.str();
            }
        }
    }
    ans.status = pending ? Mem::Unknown : Mem::Yes;
    ans.detail = pending_detail;
    return ans;
}

FamilyAnswer regBv_membership(FamilyContext& ctx, const ModuleData& M,
                              const Vec& m) {
    const Ring& ring = ctx.ring();
    if (m.size() != ring.rank)
        throw std::invalid_argument("degree vector rank mismatch");
    const IdealFamily& fam = ctx.family();
    FamilyAnswer ans;
    ans.certified_only = !M.free;
    for (unsigned mask = 1; mask <= ctx.full_mask() && mask != 0; ++mask) {
        Vec v;
        try {
            v = family_functional(fam, mask, ring.rank);
        } catch (const std::invalid_argument&) {
            ans.status = Mem::Unknown;
            ans.detail = "refused: no orthogonal coarsening functionals";
            if (!fam.no_orthogonal_reason.empty())
                ans.detail += " (" + fam.no_orthogonal_reason + ")";
            return ans;
        }
        for (const Vec& cj : ring.config)
            if (vec_dot(v, cj) < 0) {
                ans.status = Mem::Unknown;
                ans.detail = "refused: v_" + family_mask_str(mask) +
                             " is negative on cone generator " + vec_str(cj);
                return ans;
            }
        HalfplaneReport rep =
            halfplane_implies_reg(ctx.cache_for(mask), M, m, v, 1);
        if (!rep.applicable) {
            ans.status = Mem::Unknown;
            ans.detail =
                "subfamily " + family_mask_str(mask) + ": " + rep.refusal;
            return ans;
        }
        if (!rep.all) {
            // for free input the supports are exact, so failing the
            // halfplane criterion excludes m from the coarse region; for
            // resolution input the certificate is merely absent
            ans.status = M.free ? Mem::No : Mem::Unknown;
            for (const auto& lv : rep.levels)
                if (!lv.ok) {
                    ans.detail = "subfamily " + family_mask_str(mask) +
                                 ", i = " + std::to_string(lv.i) + ": " +
                                 lv.blocker;
                    break;
                }
            return ans;
        }
        if (rep.certified_only) ans.certified_only = true;
    }
    ans.status = Mem::Yes;
    return ans;
}

VresReport vres_pipeline(FamilyContext& ctx, const GradedComplex& F,
                         const Vec& m, const std::vector<Int>& b) {
    const Ring& ring = ctx.ring();
    if (m.size() != ring.rank)
        throw std::invalid_argument("degree vector rank mismatch");
    const IdealFamily& fam = ctx.family();
    VresReport rep;

    std::string err = validate_orthogonality(ring, fam);
    if (!err.empty()) {
        rep.applicable = false;
        rep.refusal =
            "orthogonal coarsening functionals are required (positive "
            "exactly on the variables of each collection): " +
            err;
        if (!fam.no_orthogonal_reason.empty())
            rep.refusal += "; " + fam.no_orthogonal_reason;
        return rep;
    }

    size_t t = ctx.size();
    size_t nmask = t ? ((size_t(1) << t) - 1) : 0;
    if (b.size() != nmask)
        throw std::invalid_argument(
            "vres_pipeline: expected one bound per nonempty subfamily "
            "(mask order), got " +
            std::to_string(b.size()) + " for " + std::to_string(nmask));

    ModuleData M = ModuleData::from_type_J(extract_type_J(F));
    size_t n = ring.nvars();

    std::vector<Coarsening> ws;
    for (unsigned mask = 1; mask <= nmask; ++mask) {
        Vec v = family_functional(fam, mask, ring.rank);
        for (const Vec& cj : ring.config)
            if (vec_dot(v, cj) < 0)
                rep.failures.push_back("v_" + family_mask_str(mask) +
                                       " is negative on cone generator " +
                                       vec_str(cj));
        Coarsening w = classify_coarsening(ring, v);
        const Int& bI = b[mask - 1];

        Vregnum vn = vregnum(ring, M, w);
        std::ostringstream note;
        note << "I = " << family_mask_str(mask) << ": v_I = " << vec_str(v)
             << ", b_I = " << bI << ", coarse regularity number ";
        if (vn.minus_infinity)
            note << "= -infinity";
        else
            note << (vn.upper_bound_only ? "<= " : "= ") << vn.value;
        if (vn.upper_bound_only) {
            rep.upper_bound_mode = true;
            note << " (upper bound from the resolution)";
        }
        rep.notes.push_back(note.str());
        if (!vn.minus_infinity && bI < vn.value) {
            std::ostringstream os;
            os << "b_I = " << bI << " is below the coarse regularity number "
               << vn.value << " for I = " << family_mask_str(mask);
            rep.failures.push_back(os.str());
        }

        Int vm = vec_dot(v, m);
        Int lo = vec_dot(v, ring.config[0]);
        Int hi = lo;
        for (const Vec& cj : ring.config) {
            Int d = vec_dot(v, cj);
            lo = std::min(lo, d);
            hi = std::max(hi, d);
        }
        for (size_t i = 0; i <= n; ++i) {
            Int coeff((long)1 - (long)i);
            const Int& step = (coeff < 0) ? hi : lo;
            Int rhs = bI + coeff * (w.c - step);
            if (vm > rhs) {
                std::ostringstream os;
                os << "degree bound fails for I = " << family_mask_str(mask)
                   << " at i = " << i << ": v_I.m = " << vm << " > " << rhs;
                rep.failures.push_back(os.str());
            }
        }
        ws.push_back(std::move(w));
    }

    rep.regv = regBv_membership(ctx, M, m);

    for (size_t p = 0; p < F.length(); ++p) {
        HalfspaceRegion H;
        for (unsigned mask = 1; mask <= nmask; ++mask) {
            const Coarsening& w = ws[mask - 1];
            Int r = b[mask - 1] + Int((long)p) * w.s + w.c - 1;
            Halfspace hs;
            hs.normal = vec_neg(w.v);
            hs.rhs = -r;
            H.push_back(std::move(hs));
        }
        rep.level_sets.push_back(std::move(H));
    }

    rep.violations = check_degree_bounds(F, ws, b);
    rep.bounds_ok = rep.violations.empty();
    rep.pass = rep.failures.empty() && rep.regv.status == Mem::Yes &&
               rep.bounds_ok;
    return rep;
}

} // namespace multireg
