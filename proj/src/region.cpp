#include "multireg/region.hpp"

#include "multireg/linalg.hpp"
#include "multireg/semigroup.hpp"

#include <algorithm>

namespace multireg {

namespace {

bool cone_member(const std::vector<Vec>& C, const Vec& d) {
    MemberResult r = semigroup_member(C, d);
    if (r.status == Mem::Unknown)
        throw CapExceeded("cone membership: search budget exhausted");
    return r.status == Mem::Yes;
}

void check_base(const Region& A, const Region& B) {
    if (A.base != B.base)
        throw std::invalid_argument("region operands have different base cones");
}

std::string merge_notes(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty() || a == b) return a;
    return a + "; " + b;
}

} // namespace

Region make_region(std::vector<Vec> base, std::vector<Vec> gens) {
    Region R;
    R.base = sorted_unique(std::move(base));
    std::vector<Vec> uniq = sorted_unique(std::move(gens));
    for (size_t i = 0; i < uniq.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < uniq.size() && !redundant; ++j)
            if (i != j && cone_member(R.base, vec_sub(uniq[i], uniq[j])))
                redundant = true;
        if (!redundant) R.gens.push_back(uniq[i]);
    }
    return R;
}

std::vector<Vec> shifted_cone_gens(const std::vector<Vec>& C, long j) {
    if (C.empty()) throw std::invalid_argument("shifted cone: empty cone");
    size_t r = C[0].size();
    if (j == 0) return {vec_zero(r)};
    long k = j > 0 ? j : -j;
    long cap = cap_from_env("MULTIREG_SHIFT_CAP", 1000000);
    std::vector<Vec> out;
    // All w in N^l with |w| = k, accumulated as sums w.C.
    std::vector<Int> w(C.size(), Int(0));
    std::function<void(size_t, long, Vec)> walk = [&](size_t pos, long left,
                                                      Vec acc) {
        if (pos + 1 == C.size()) {
            for (size_t t = 0; t < r; ++t) acc[t] += Int(left) * C[pos][t];
            if ((long)out.size() >= cap)
                throw CapExceeded("shifted cone: composition cap exceeded");
            out.push_back(j > 0 ? acc : vec_neg(acc));
            return;
        }
        for (long take = 0; take <= left; ++take) {
            Vec nxt = acc;
            for (size_t t = 0; t < r; ++t) nxt[t] += Int(take) * C[pos][t];
            walk(pos + 1, left - take, std::move(nxt));
        }
    };
    walk(0, k, vec_zero(r));
    return out;
}

Region shifted_cone(const std::vector<Vec>& C, long j) {
    return make_region(C, shifted_cone_gens(C, j));
}

Region region_translate(Region R, const Vec& d) {
    for (auto& g : R.gens) g = vec_add(g, d);
    return R;
}

Region region_union(const Region& A, const Region& B) {
    check_base(A, B);
    std::vector<Vec> gens = A.gens;
    gens.insert(gens.end(), B.gens.begin(), B.gens.end());
    Region R = make_region(A.base, std::move(gens));
    R.exact = A.exact && B.exact;
    R.note = merge_notes(A.note, B.note);
    return R;
}

Region region_sum(const Region& A, const Region& B) {
    check_base(A, B);
    std::vector<Vec> gens;
    for (const auto& a : A.gens)
        for (const auto& b : B.gens) gens.push_back(vec_add(a, b));
    Region R = make_region(A.base, std::move(gens));
    R.exact = A.exact && B.exact;
    R.note = merge_notes(A.note, B.note);
    return R;
}

// ---------------------------------------------------------------------------
// Intersection of two translated cones.

namespace {

// Minimal nonnegative solutions of sum x_i cols_i = 0 with optional upper
// bounds per coordinate (-1 = none). Frontier search with the negative-
// scalar-product extension rule; `complete` is false when the node cap hit.
struct CDResult {
    std::vector<std::vector<Int>> minimal;
    bool complete = true;
};

CDResult cd_minimal(const std::vector<Vec>& cols, const std::vector<long>& upper,
                    long cap) {
    CDResult res;
    if (cols.empty()) return res;
    size_t k = cols.size();
    size_t r = cols[0].size();

    using State = std::vector<Int>;
    auto value_of = [&](const State& p) {
        Vec v = vec_zero(r);
        for (size_t i = 0; i < k; ++i)
            for (size_t t = 0; t < r; ++t) v[t] += p[i] * cols[i][t];
        return v;
    };
    auto dominates_some_solution = [&](const State& q) {
        for (const auto& s : res.minimal) {
            bool ge = true;
            for (size_t i = 0; i < k && ge; ++i)
                if (q[i] < s[i]) ge = false;
            if (ge) return true;
        }
        return false;
    };

    std::set<State> frontier;
    for (size_t i = 0; i < k; ++i) {
        if (upper[i] == 0) continue;
        State e(k, Int(0));
        e[i] = 1;
        frontier.insert(e);
    }
    long nodes = 0;
    while (!frontier.empty()) {
        std::set<State> next;
        for (const auto& p : frontier) {
            if (++nodes > cap) {
                res.complete = false;
                return res;
            }
            Vec v = value_of(p);
            if (vec_is_zero(v)) {
                if (!dominates_some_solution(p)) res.minimal.push_back(p);
                continue;
            }
            for (size_t i = 0; i < k; ++i) {
                if (vec_dot(v, cols[i]) >= 0) continue;
                if (upper[i] >= 0 && p[i] + 1 > upper[i]) continue;
                State q = p;
                q[i] += 1;
                if (dominates_some_solution(q)) continue;
                next.insert(std::move(q));
            }
        }
        frontier = std::move(next);
    }
    return res;
}

// (a + NC) ∩ (b + NC) as generator list; complete=false on cap overrun.
struct PairResult {
    std::vector<Vec> gens;
    bool complete = true;
};

PairResult pair_intersect(const std::vector<Vec>& C, const Vec& a, const Vec& b) {
    PairResult out;
    size_t r = a.size();
    size_t l = C.size();
    Vec diff = vec_sub(b, a);

    // Independent columns: the displacement has at most one decomposition.
    std::vector<QVec> rows(l, QVec(r));
    for (size_t j = 0; j < l; ++j)
        for (size_t t = 0; t < r; ++t) rows[j][t] = Rat(C[j][t]);
    if (q_rank(rows) == l) {
        std::vector<Vec> A(r, Vec(l, Int(0)));
        for (size_t j = 0; j < l; ++j)
            for (size_t t = 0; t < r; ++t) A[t][j] = C[j][t];
        Vec w;
        if (!z_solve(A, diff, w)) return out; // empty
        Vec g = b;
        for (size_t j = 0; j < l; ++j) {
            if (w[j] >= 0) continue;
            for (size_t t = 0; t < r; ++t) g[t] += (-w[j]) * C[j][t];
        }
        out.gens.push_back(g);
        return out;
    }

    // General case: minimal solutions of C.lam - C.mu - diff * t = 0 with
    // t <= 1; the t = 1 solutions give the generators a + C.lam.
    std::vector<Vec> cols;
    for (const auto& c : C) cols.push_back(c);
    for (const auto& c : C) cols.push_back(vec_neg(c));
    cols.push_back(vec_neg(diff));
    std::vector<long> upper(cols.size(), -1);
    upper.back() = 1;
    long cap = cap_from_env("MULTIREG_CD_CAP", 100000);
    CDResult cd = cd_minimal(cols, upper, cap);
    out.complete = cd.complete;
    for (const auto& sol : cd.minimal) {
        if (sol.back() != 1) continue;
        Vec g = a;
        for (size_t j = 0; j < l; ++j)
            for (size_t t = 0; t < r; ++t) g[t] += sol[j] * C[j][t];
        out.gens.push_back(g);
    }
    return out;
}

} // namespace

Region region_intersect(const Region& A, const Region& B) {
    check_base(A, B);
    std::vector<Vec> gens;
    bool complete = true;
    for (const auto& a : A.gens)
        for (const auto& b : B.gens) {
            PairResult p = pair_intersect(A.base, a, b);
            complete = complete && p.complete;
            gens.insert(gens.end(), p.gens.begin(), p.gens.end());
        }
    Region R = make_region(A.base, std::move(gens));
    R.exact = A.exact && B.exact && complete;
    R.note = merge_notes(A.note, B.note);
    if (!complete) R.note = merge_notes(R.note, "intersection cap");
    return R;
}

bool region_member(const Region& R, const Vec& d) {
    for (const auto& g : R.gens)
        if (cone_member(R.base, vec_sub(d, g))) return true;
    return false;
}

bool region_subset(const Region& inner, const Region& outer) {
    check_base(inner, outer);
    for (const auto& g : inner.gens)
        if (!region_member(outer, g)) return false;
    return true;
}

// ---------------------------------------------------------------------------

Region reg_of_J(const TypeJ& J, const Region& regS, const std::vector<Vec>& C) {
    bool have = false;
    Region acc;
    auto fold = [&](const Region& term) {
        if (!have) {
            acc = term;
            have = true;
        } else {
            acc = region_intersect(acc, term);
        }
    };
    if (!J.levels.empty())
        for (const Vec& d : J.levels[0]) fold(region_translate(regS, d));
    for (size_t p = 1; p < J.levels.size(); ++p) {
        if (J.levels[p].empty()) continue;
        Region shifted = region_sum(regS, shifted_cone(C, 1 - (long)p));
        for (const Vec& d : J.levels[p])
            for (const Vec& c : C)
                fold(region_translate(shifted, vec_sub(d, c)));
    }
    if (!have) throw std::invalid_argument("reg_of_J: twist data is empty");
    return acc;
}

Region reg_of_J_level(const TypeJ& J, const Region& regS,
                      const std::vector<Vec>& C, long i) {
    bool have = false;
    Region acc;
    for (size_t p = 0; p < J.levels.size(); ++p) {
        if (J.levels[p].empty()) continue;
        Region shifted = region_sum(regS, shifted_cone(C, 1 - i - (long)p));
        for (const Vec& d : J.levels[p]) {
            Region term = region_translate(shifted, d);
            if (!have) {
                acc = term;
                have = true;
            } else {
                acc = region_intersect(acc, term);
            }
        }
    }
    if (!have) throw std::invalid_argument("reg_of_J_level: twist data is empty");
    Region out;
    bool first = true;
    for (const Vec& t : shifted_cone_gens(C, 1 - i)) {
        Region shiftback = region_translate(acc, vec_neg(t));
        if (first) {
            out = shiftback;
            first = false;
        } else {
            out = region_intersect(out, shiftback);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

bool DregQuery::member(const Vec& d) const {
    for (const auto& g : dgens) {
        if (!region_member(shift0, vec_sub(g, d))) return false;
        for (const auto& c : C)
            if (!region_member(shift1, vec_add(vec_sub(g, d), c))) return false;
    }
    return true;
}

DregQuery make_dreg_query(const Region& D, const Region& regS, long p) {
    DregQuery q;
    q.dgens = D.gens;
    q.C = regS.base;
    q.shift0 = region_sum(regS, shifted_cone(q.C, -p));
    q.shift1 = region_sum(regS, shifted_cone(q.C, 1 - p));
    return q;
}

bool dreg_member(const Region& D, const Region& regS, long p, const Vec& d) {
    return make_dreg_query(D, regS, p).member(d);
}

std::vector<Vec> box_points(const Vec& lo, const Vec& hi) {
    check_rank(lo, hi);
    long cap = cap_from_env("MULTIREG_BOX_CAP", 2000000);
    std::vector<Vec> out;
    Vec cur = lo;
    for (size_t i = 0; i < lo.size(); ++i)
        if (lo[i] > hi[i]) return out;
    for (;;) {
        if ((long)out.size() >= cap) throw CapExceeded("box enumeration cap");
        out.push_back(cur);
        size_t i = lo.size();
        while (i > 0) {
            --i;
            if (cur[i] < hi[i]) {
                cur[i] += 1;
                for (size_t j = i + 1; j < lo.size(); ++j) cur[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
        if (lo.empty()) return out;
    }
}

std::vector<Vec> dreg_in_box(const Region& D, const Region& regS, long p,
                             const Vec& lo, const Vec& hi) {
    DregQuery q = make_dreg_query(D, regS, p);
    std::vector<Vec> out;
    for (const Vec& d : box_points(lo, hi))
        if (q.member(d)) out.push_back(d);
    return out;
}

std::vector<Vec> maximal_in_cone_order(const std::vector<Vec>& pts,
                                       const std::vector<Vec>& C) {
    std::vector<Vec> uniq = sorted_unique(pts);
    std::vector<Vec> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        bool below = false;
        for (size_t j = 0; j < uniq.size() && !below; ++j)
            if (i != j && cone_member(C, vec_sub(uniq[j], uniq[i]))) below = true;
        if (!below) out.push_back(uniq[i]);
    }
    return out;
}

} // namespace multireg
