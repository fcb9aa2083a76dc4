#include "multireg/cohomology.hpp"

#include "multireg/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <cmath>
#include <sstream>

namespace multireg {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

std::string join_notes(const std::string& a, const std::string& b) {
    if (a.empty()) return b;
    if (b.empty() || a == b) return a;
    return a + "; " + b;
}

} // namespace

CohCache::CohCache(const Ring& ring, std::vector<Vec> ideal_gens) : ring_(&ring) {
    gens_ = minimalize_monomials(std::move(ideal_gens));
    if (gens_.empty())
        throw std::invalid_argument("cohomology: the irrelevant ideal has no generators");
    if (gens_.size() > 16)
        throw CapExceeded("cohomology: more than 16 ideal generators");
    if (ring.nvars() > 20)
        throw CapExceeded("cohomology: more than 20 variables");
    for (const auto& g : gens_)
        if (g.size() != ring.nvars())
            throw std::invalid_argument("cohomology: exponent vector length mismatch");

    std::vector<unsigned> supp(gens_.size(), 0u);
    for (size_t j = 0; j < gens_.size(); ++j)
        for (size_t i = 0; i < gens_[j].size(); ++i)
            if (gens_[j][i] > 0) supp[j] |= 1u << i;
    supp_or_.assign(1u << gens_.size(), 0u);
    for (unsigned mask = 1; mask < supp_or_.size(); ++mask) {
        unsigned low = mask & (mask - 1);
        unsigned bit = mask ^ low;
        int j = __builtin_ctz(bit);
        supp_or_[mask] = supp_or_[low] | supp[(size_t)j];
    }
}

CohCache::CohCache(const Ring& ring) : CohCache(ring, ring.ideal) {}

const std::vector<long>& CohCache::pattern(unsigned sigma_mask) {
    auto it = pattern_.find(sigma_mask);
    if (it != pattern_.end()) return it->second;

    size_t q = gens_.size();
    std::vector<std::vector<unsigned>> level(q + 1);
    for (unsigned mask = 0; mask < (1u << q); ++mask)
        if ((sigma_mask & ~supp_or_[mask]) == 0)
            level[(size_t)popcount(mask)].push_back(mask);

    // rank of the differential level p -> p+1 (entries are Cech signs)
    std::vector<size_t> rank(q + 1, 0);
    for (size_t p = 0; p < q; ++p) {
        if (level[p].empty() || level[p + 1].empty()) continue;
        std::vector<QVec> Mx(level[p + 1].size(), QVec(level[p].size(), Rat(0)));
        for (size_t col = 0; col < level[p].size(); ++col) {
            unsigned T = level[p][col];
            for (size_t j = 0; j < q; ++j) {
                if (T & (1u << j)) continue;
                unsigned T2 = T | (1u << j);
                auto pos = std::lower_bound(level[p + 1].begin(),
                                            level[p + 1].end(), T2);
                if (pos == level[p + 1].end() || *pos != T2) continue;
                size_t row = (size_t)(pos - level[p + 1].begin());
                int sgn = popcount(T & ((1u << j) - 1)) % 2 ? -1 : 1;
                Mx[row][col] = sgn;
            }
        }
        rank[p] = q_rank(std::move(Mx));
    }

    std::vector<long> h(q + 1, 0);
    long euler_dim = 0, euler_h = 0;
    for (size_t p = 0; p <= q; ++p) {
        long dim = (long)level[p].size();
        long hp = dim - (long)rank[p] - (long)(p ? rank[p - 1] : 0);
        if (hp < 0) throw std::logic_error("negative cohomology rank in sign pattern");
        h[p] = hp;
        long sign = (p % 2) ? -1 : 1;
        euler_dim += sign * dim;
        euler_h += sign * hp;
    }
    if (euler_dim != euler_h)
        throw std::logic_error("Euler characteristic cross-check failed in sign pattern");
    return pattern_.emplace(sigma_mask, std::move(h)).first->second;
}

const std::vector<SupportPiece>& CohCache::supports(size_t i) {
    auto it = supports_.find(i);
    if (it != supports_.end()) return it->second;
    std::vector<SupportPiece> out;
    size_t n = ring_->nvars();
    if (i <= gens_.size()) {
        for (unsigned sigma = 0; sigma < (1u << n); ++sigma) {
            long h = pattern(sigma)[i];
            if (h == 0) continue;
            SupportPiece piece;
            piece.mult = h;
            piece.v = vec_zero(ring_->rank);
            for (size_t k = 0; k < n; ++k) {
                if (sigma & (1u << k)) {
                    piece.sigma.push_back((int)k);
                    piece.v = vec_sub(piece.v, ring_->var_degrees[k]);
                    piece.D.push_back(vec_neg(ring_->var_degrees[k]));
                } else {
                    piece.D.push_back(ring_->var_degrees[k]);
                }
            }
            Pointedness p = check_pointed(piece.D);
            piece.pointed = p.pointed;
            if (p.pointed) piece.psi = p.phi;
            out.push_back(std::move(piece));
        }
    }
    return supports_.emplace(i, std::move(out)).first->second;
}

PieceDim coh_free_piece(CohCache& coh, const std::vector<Vec>& shifts, size_t i,
                        const Vec& d) {
    PieceDim out;
    for (const SupportPiece& piece : coh.supports(i)) {
        for (const Vec& s : shifts) {
            Vec target = vec_sub(vec_sub(d, s), piece.v);
            if (piece.pointed) {
                out.dim += Int(piece.mult) * fiber_count(piece.D, target, piece.psi);
            } else {
                MemberResult m = group_member(piece.D, target);
                if (m.status == Mem::Unknown)
                    throw CapExceeded("coh_free_piece: membership budget exhausted");
                if (m.status == Mem::Yes) {
                    out.finite = false;
                    out.dim = 0;
                    return out;
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct AvoidWitness {
    size_t piece_index = 0;
    Vec t;      // cone translate that hit the support
    Vec degree; // a degree where cohomology is nonzero
};

Mem avoid_impl(CohCache& coh, size_t idx, long j, const Vec& m,
               const std::vector<Vec>& shifts, AvoidWitness* wit) {
    const std::vector<Vec>& C = coh.ring().config;
    std::vector<Vec> tr = shifted_cone_gens(C, j);
    bool pending = false;
    const auto& pieces = coh.supports(idx);
    for (size_t pi = 0; pi < pieces.size(); ++pi) {
        const SupportPiece& piece = pieces[pi];
        std::vector<Vec> F = piece.D;
        for (const Vec& c : C) F.push_back(vec_neg(c));
        for (const Vec& s : shifts)
            for (const Vec& t : tr) {
                Vec target = vec_sub(vec_add(vec_sub(m, s), t), piece.v);
                MemberResult r = group_member(F, target);
                if (r.status == Mem::Yes) {
                    if (wit) {
                        wit->piece_index = pi;
                        wit->t = t;
                        wit->degree = vec_add(s, piece.v);
                        for (size_t k = 0; k < piece.D.size(); ++k)
                            wit->degree = vec_add(
                                wit->degree, vec_scale(r.coeffs[k], piece.D[k]));
                    }
                    return Mem::No;
                }
                if (r.status == Mem::Unknown) pending = true;
            }
    }
    return pending ? Mem::Unknown : Mem::Yes;
}

} // namespace

Mem translates_avoid_support(CohCache& coh, size_t idx, long j, const Vec& m,
                             const std::vector<Vec>& shifts) {
    return avoid_impl(coh, idx, j, m, shifts, nullptr);
}

RegAnswer regS_membership(CohCache& coh, const Vec& m) {
    RegAnswer ans;
    bool pending = false;
    Vec zero = vec_zero(coh.ring().rank);
    for (size_t i = 0; i <= coh.length(); ++i) {
        AvoidWitness wit;
        Mem st = avoid_impl(coh, i, 1 - (long)i, m, {zero}, &wit);
        if (st == Mem::No) {
            const SupportPiece& piece = coh.supports(i)[wit.piece_index];
            std::ostringstream os;
            os << "H^" << i << " nonzero at degree " << vec_str(wit.degree)
               << " (sign pattern {";
            for (size_t k = 0; k < piece.sigma.size(); ++k)
                os << (k ? "," : "") << coh.ring().var_names[(size_t)piece.sigma[k]];
            os << "}, translate " << vec_str(wit.t) << ")";
            ans.status = Mem::No;
            ans.detail = os.str();
            return ans;
        }
        if (st == Mem::Unknown) pending = true;
    }
    ans.status = pending ? Mem::Unknown : Mem::Yes;
    if (pending) ans.detail = "membership budget exhausted";
    return ans;
}

// ---------------------------------------------------------------------------
// Regularity region of the ring over a scan box.

namespace {

class RegScan {
  public:
    RegScan(CohCache& coh) : coh_(coh) {}

    Mem member(const Vec& m) {
        auto it = memo_.find(m);
        if (it != memo_.end()) return it->second;
        Mem st = regS_membership(coh_, m).status;
        memo_.emplace(m, st);
        return st;
    }

  private:
    CohCache& coh_;
    VecMap<Mem> memo_;
};

// Is u in N{F} where F = D_sigma plus the negated cone? Memoized per piece.
struct SliceCertifier {
    CohCache& coh;
    std::map<std::pair<size_t, size_t>, std::vector<Vec>> fcache; // (idx,piece)->F

    explicit SliceCertifier(CohCache& c) : coh(c) {}

    const std::vector<Vec>& F(size_t idx, size_t pi) {
        auto key = std::make_pair(idx, pi);
        auto it = fcache.find(key);
        if (it != fcache.end()) return it->second;
        std::vector<Vec> F = coh.supports(idx)[pi].D;
        for (const Vec& c : coh.ring().config) F.push_back(vec_neg(c));
        return fcache.emplace(key, std::move(F)).first->second;
    }

    bool in_F(size_t idx, size_t pi, const Vec& u) {
        MemberResult r = group_member(F(idx, pi), u);
        return r.status == Mem::Yes;
    }

    // Certify that every point with the K-coordinates at most b is outside
    // the regularity region: find one violating support translate that
    // absorbs all free directions.
    bool slice_irregular(const Vec& b, const std::vector<bool>& inK) {
        size_t r = b.size();
        Vec base = b;
        for (size_t k = 0; k < r; ++k)
            if (!inK[k]) base[k] = 0;
        for (size_t idx = 0; idx <= coh.length(); ++idx) {
            const auto& pieces = coh.supports(idx);
            for (size_t pi = 0; pi < pieces.size(); ++pi) {
                bool dirs_ok = true;
                for (size_t k = 0; k < r && dirs_ok; ++k) {
                    if (inK[k]) continue;
                    Vec e = vec_zero(r);
                    e[k] = 1;
                    if (!in_F(idx, pi, e)) dirs_ok = false;
                    e[k] = -1;
                    if (dirs_ok && !in_F(idx, pi, e)) dirs_ok = false;
                }
                if (!dirs_ok) continue;
                for (const Vec& t :
                     shifted_cone_gens(coh.ring().config, 1 - (long)idx)) {
                    Vec target = vec_sub(vec_add(base, t), pieces[pi].v);
                    if (in_F(idx, pi, target)) return true;
                }
            }
        }
        return false;
    }
};

bool is_standard_basis(const std::vector<Vec>& C, size_t rank) {
    if (C.size() != rank) return false;
    std::vector<Vec> sorted = sorted_unique(C);
    if (sorted.size() != rank) return false;
    for (size_t k = 0; k < rank; ++k) {
        Vec e = vec_zero(rank);
        e[k] = 1;
        bool found = false;
        for (const auto& c : sorted)
            if (c == e) found = true;
        if (!found) return false;
    }
    return true;
}

} // namespace

Region regS_region(CohCache& coh, const Vec& lo, const Vec& hi) {
    const Ring& ring = coh.ring();
    std::vector<Vec> C = sorted_unique(ring.config);
    size_t r = ring.rank;
    check_rank(lo, hi);
    if (lo.size() != r) throw std::invalid_argument("regS_region: box rank mismatch");

    RegScan scan(coh);
    std::string window_note = "window " + vec_str(lo) + ".." + vec_str(hi);

    // Rank-one positive cone: per-residue thresholds, exact by upward
    // closure along steps of c.
    if (r == 1 && C.size() == 1 && C[0][0] >= 1) {
        long c = (long)C[0][0].get_si();
        long up_cap = cap_from_env("MULTIREG_SCAN_UP", 64);
        long down_cap = cap_from_env("MULTIREG_SCAN_DOWN", 4096);
        std::vector<Vec> gens;
        bool exact = true;
        std::string note;
        for (long rho = 0; rho < c; ++rho) {
            Int m0 = Int(rho) + Int(c) * ((hi[0] - Int(rho)) / Int(c));
            while (m0 > hi[0]) m0 -= c; // floor adjustment for negatives
            Int m = m0;
            long tries = 0;
            while (scan.member(Vec{m}) != Mem::Yes && tries < up_cap) {
                m += c;
                ++tries;
            }
            if (scan.member(Vec{m}) != Mem::Yes) {
                exact = false;
                note = "no member found in residue class " + std::to_string(rho);
                continue;
            }
            long steps = 0;
            while (steps < down_cap && scan.member(Vec{m - c}) == Mem::Yes) {
                m -= c;
                ++steps;
            }
            if (steps >= down_cap) {
                exact = false;
                note = "descent cap in residue class " + std::to_string(rho);
            } else if (scan.member(Vec{m - c}) != Mem::No) {
                exact = false;
                note = "membership budget";
            }
            gens.push_back(Vec{m});
        }
        Region R = make_region(C, std::move(gens));
        R.exact = exact;
        R.note = exact ? "" : join_notes(window_note, note);
        return R;
    }

    // Window scan shared by the remaining layers.
    bool budget_hit = false;
    std::vector<Vec> members;
    for (const Vec& d : box_points(lo, hi)) {
        Mem st = scan.member(d);
        if (st == Mem::Unknown) budget_hit = true;
        if (st == Mem::Yes) members.push_back(d);
    }
    std::vector<Vec> gens;
    for (const Vec& d : members) {
        bool minimal = true;
        for (const Vec& c : C) {
            if (scan.member(vec_sub(d, c)) != Mem::No) {
                minimal = false;
                break;
            }
        }
        if (minimal) gens.push_back(d);
    }

    if (is_standard_basis(C, r) && !budget_hit && !gens.empty()) {
        // Completeness certificate: the complement of the candidate region
        // decomposes into downward slices; show each slice is irregular.
        long piece_cap = cap_from_env("MULTIREG_PIECE_CAP", 4096);
        double log_pieces = (double)gens.size() * std::log((double)r);
        bool ok = log_pieces <= std::log((double)piece_cap) + 1e-9;
        SliceCertifier cert(coh);
        std::set<std::pair<std::vector<bool>, Vec>> seen;
        std::vector<size_t> chi(gens.size(), 0);
        while (ok) {
            std::vector<bool> inK(r, false);
            Vec b(r, Int(0));
            std::vector<bool> has(r, false);
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                size_t k = chi[gi];
                Int cand = gens[gi][k] - 1;
                if (!has[k] || cand < b[k]) b[k] = cand;
                has[k] = true;
                inK[k] = true;
            }
            for (size_t k = 0; k < r; ++k)
                if (!inK[k]) b[k] = 0;
            if (seen.insert({inK, b}).second) {
                bool full = true;
                for (size_t k = 0; k < r; ++k)
                    if (!inK[k]) full = false;
                bool piece_ok;
                if (full) {
                    piece_ok = scan.member(b) == Mem::No;
                } else {
                    piece_ok = cert.slice_irregular(b, inK);
                }
                if (!piece_ok) {
                    ok = false;
                    break;
                }
            }
            // next selector
            size_t gi = 0;
            while (gi < gens.size()) {
                if (++chi[gi] < r) break;
                chi[gi] = 0;
                ++gi;
            }
            if (gi == gens.size()) break;
        }
        Region R = make_region(C, std::move(gens));
        R.exact = ok;
        if (!ok) R.note = window_note;
        return R;
    }

    Region R = make_region(C, std::move(gens));
    R.exact = false;
    R.note = budget_hit ? join_notes(window_note, "membership budget") : window_note;
    return R;
}

// ---------------------------------------------------------------------------

bool resolution_vanishing(CohCache& coh, const TypeJ& J, long i, const Vec& d) {
    if (i < 0) return true;
    for (size_t p = 0; p < J.levels.size(); ++p) {
        size_t k = (size_t)i + p;
        if (k > coh.length()) continue;
        for (const Vec& dp : J.levels[p])
            for (const SupportPiece& piece : coh.supports(k)) {
                Vec target = vec_sub(vec_sub(d, dp), piece.v);
                MemberResult m = group_member(piece.D, target);
                if (m.status != Mem::No) return false;
            }
    }
    return true;
}

bool halfspace_contains(const HalfspaceRegion& H, const Vec& x) {
    for (const Halfspace& h : H)
        if (vec_dot(h.normal, x) < h.rhs) return false;
    return true;
}

bool resolution_vanishing_with(const TypeJ& J, long i, const Vec& d,
                               const std::map<long, HalfspaceRegion>& V) {
    if (i < 0) return true;
    for (size_t p = 0; p < J.levels.size(); ++p) {
        long k = i + (long)p;
        for (const Vec& dp : J.levels[p]) {
            auto it = V.find(k);
            if (it == V.end()) return false;
            if (!halfspace_contains(it->second, vec_sub(d, dp))) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

MVContext::MVContext(const Ring& ring, std::vector<std::vector<Vec>> ideals)
    : ring_(&ring), ideals_(std::move(ideals)) {
    if (ideals_.empty())
        throw std::invalid_argument("MVContext: empty ideal family");
    if (ideals_.size() > 16) throw CapExceeded("MVContext: family too large");
}

CohCache& MVContext::cache_for(unsigned mask) {
    auto it = caches_.find(mask);
    if (it != caches_.end()) return it->second;
    std::vector<Vec> gens;
    for (size_t i = 0; i < ideals_.size(); ++i)
        if (mask & (1u << i))
            gens.insert(gens.end(), ideals_[i].begin(), ideals_[i].end());
    return caches_.emplace(mask, CohCache(*ring_, std::move(gens))).first->second;
}

bool MVContext::vanishes(const std::vector<Vec>& shifts, long i, const Vec& d) {
    if (i < 0) return true;
    for (unsigned mask = 1; mask < (1u << ideals_.size()); ++mask) {
        size_t k = (size_t)i + (size_t)popcount(mask) - 1;
        PieceDim pd = coh_free_piece(cache_for(mask), shifts, k, d);
        if (!pd.finite || pd.dim != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// B-torsion of a monomial module.

namespace {

bool in_relations(const MonomialModule& M, size_t alpha, const Vec& e) {
    for (const auto& rel : M.relations)
        if (rel.first == alpha && divides(rel.second, e)) return true;
    return false;
}

} // namespace

TorsionDim h0_torsion_exact(const Ring& ring, const MonomialModule& M,
                            const Vec& d) {
    if (ring.ideal.empty())
        throw std::invalid_argument("h0_torsion: the ring has no irrelevant ideal");
    long cap = cap_from_env("MULTIREG_ENUM_CAP", 1000000);
    TorsionDim out;
    out.note = "saturation per ideal generator";
    for (size_t a = 0; a < M.shifts.size(); ++a) {
        Vec want = vec_sub(d, M.shifts[a]);
        for (const Vec& e : monomials_of_degree(ring, want, cap)) {
            if (in_relations(M, a, e)) continue;
            bool torsion = true;
            for (const Vec& mj : ring.ideal) {
                // Saturating by mj frees the coordinates in its support;
                // the element dies iff some relation matches off-support.
                bool killed = false;
                for (const auto& rel : M.relations) {
                    if (rel.first != a) continue;
                    bool fits = true;
                    for (size_t k = 0; k < e.size() && fits; ++k)
                        if (mj[k] == 0 && rel.second[k] > e[k]) fits = false;
                    if (fits) {
                        killed = true;
                        break;
                    }
                }
                if (!killed) {
                    torsion = false;
                    break;
                }
            }
            if (torsion) out.dim += 1;
        }
    }
    return out;
}

TorsionDim h0_torsion_iterative(const Ring& ring, const MonomialModule& M,
                                const Vec& d, int stab_window) {
    if (ring.ideal.empty())
        throw std::invalid_argument("h0_torsion: the ring has no irrelevant ideal");
    if (stab_window < 1) stab_window = 1;
    long cap = cap_from_env("MULTIREG_ENUM_CAP", 1000000);

    // killed_by_level(a, e, k): x^e e_a is annihilated by all length-k
    // products of ideal generators. Memoized; level grows until the counted
    // dimension stabilizes.
    std::map<std::pair<size_t, Vec>, std::map<int, bool>,
             bool (*)(const std::pair<size_t, Vec>&, const std::pair<size_t, Vec>&)>
        memo([](const std::pair<size_t, Vec>& x, const std::pair<size_t, Vec>& y) {
            if (x.first != y.first) return x.first < y.first;
            return VecLess{}(x.second, y.second);
        });

    std::function<bool(size_t, const Vec&, int)> killed = [&](size_t a,
                                                              const Vec& e,
                                                              int k) -> bool {
        if (in_relations(M, a, e)) return true;
        if (k == 0) return false;
        auto& slot = memo[{a, e}];
        auto it = slot.find(k);
        if (it != slot.end()) return it->second;
        bool all = true;
        for (const Vec& mj : ring.ideal) {
            if (!killed(a, vec_add(e, mj), k - 1)) {
                all = false;
                break;
            }
        }
        slot[k] = all;
        return all;
    };

    std::vector<std::pair<size_t, Vec>> basis;
    for (size_t a = 0; a < M.shifts.size(); ++a) {
        Vec want = vec_sub(d, M.shifts[a]);
        for (const Vec& e : monomials_of_degree(ring, want, cap))
            if (!in_relations(M, a, e)) basis.push_back({a, e});
    }

    TorsionDim out;
    out.exact = false;
    Int prev = -1;
    int stable = 0;
    int k = 0;
    int kcap = (int)cap_from_env("MULTIREG_TORSION_DEPTH", 64);
    for (k = 1; k <= kcap; ++k) {
        Int dim = 0;
        for (const auto& b : basis)
            if (killed(b.first, b.second, k)) dim += 1;
        if (dim == prev)
            ++stable;
        else
            stable = 0;
        prev = dim;
        if (stable >= stab_window) break;
    }
    out.dim = prev;
    out.note = "heuristic: kernel chain stabilized " + std::to_string(stable) +
               " times at depth " + std::to_string(k > kcap ? kcap : k);
    return out;
}

// ---------------------------------------------------------------------------
// Fine-degree Cech oracle for shifted free modules.

OracleDim cech_oracle_piece(const Ring& ring, const std::vector<Vec>& shifts,
                            const Vec& d, long W) {
    size_t q = ring.ideal.size();
    size_t n = ring.nvars();
    if (q == 0)
        throw std::invalid_argument("cech_oracle: the ring has no irrelevant ideal");
    if (q > 16) throw CapExceeded("cech_oracle: more than 16 ideal generators");
    if (W < 0) throw std::invalid_argument("cech_oracle: negative window");

    std::vector<unsigned> supp(q, 0u);
    for (size_t j = 0; j < q; ++j)
        for (size_t i = 0; i < n; ++i)
            if (ring.ideal[j][i] > 0) supp[j] |= 1u << i;
    std::vector<unsigned> supp_or(1u << q, 0u);
    for (unsigned mask = 1; mask < supp_or.size(); ++mask) {
        unsigned low = mask & (mask - 1);
        supp_or[mask] = supp_or[low] | supp[(size_t)__builtin_ctz(mask ^ low)];
    }

    // Fine realization of each shift: the first monomial of that degree.
    std::vector<Vec> lift;
    for (const Vec& s : shifts) {
        auto m = first_fiber_solution(ring.var_degrees, s, ring.grading_phi);
        if (!m)
            throw std::invalid_argument("cech_oracle: shift " + vec_str(s) +
                                        " is not the degree of a monomial");
        lift.push_back(*m);
    }

    // Suffix degree ranges for pruning the fine-degree fiber walk.
    size_t r = ring.rank;
    std::vector<Vec> suf_lo(n + 1, vec_zero(r)), suf_hi(n + 1, vec_zero(r));
    for (size_t i = n; i-- > 0;) {
        suf_lo[i] = suf_lo[i + 1];
        suf_hi[i] = suf_hi[i + 1];
        for (size_t t = 0; t < r; ++t) {
            Int a = ring.var_degrees[i][t] * Int(-W);
            Int b = ring.var_degrees[i][t] * Int(W);
            if (a > b) std::swap(a, b);
            suf_lo[i][t] += a;
            suf_hi[i][t] += b;
        }
    }

    OracleDim out;
    out.h.assign(q + 1, Int(0));

    Vec a(n, Int(0));
    std::function<void(size_t, Vec)> walk = [&](size_t i, Vec need) {
        if (i == n) {
            if (!vec_is_zero(need)) return;
            bool on_boundary = false;
            for (size_t k = 0; k < n; ++k)
                if (a[k] == Int(W) || a[k] == Int(-W)) on_boundary = true;
            for (size_t al = 0; al < shifts.size(); ++al) {
                // Which localizations see this fine degree.
                unsigned sigma = 0;
                for (size_t k = 0; k < n; ++k)
                    if (a[k] - lift[al][k] < 0) sigma |= 1u << k;
                std::vector<std::vector<unsigned>> level(q + 1);
                bool any = false;
                for (unsigned mask = 0; mask < (1u << q); ++mask)
                    if ((sigma & ~supp_or[mask]) == 0) {
                        level[(size_t)popcount(mask)].push_back(mask);
                        any = true;
                    }
                if (!any) continue;
                if (on_boundary) out.conclusive = false;
                std::vector<size_t> rank(q + 1, 0);
                for (size_t p = 0; p < q; ++p) {
                    if (level[p].empty() || level[p + 1].empty()) continue;
                    std::vector<QVec> Mx(level[p + 1].size(),
                                         QVec(level[p].size(), Rat(0)));
                    for (size_t col = 0; col < level[p].size(); ++col) {
                        unsigned T = level[p][col];
                        for (size_t j = 0; j < q; ++j) {
                            if (T & (1u << j)) continue;
                            unsigned T2 = T | (1u << j);
                            auto pos = std::lower_bound(level[p + 1].begin(),
                                                        level[p + 1].end(), T2);
                            if (pos == level[p + 1].end() || *pos != T2) continue;
                            Mx[(size_t)(pos - level[p + 1].begin())][col] =
                                popcount(T & ((1u << j) - 1)) % 2 ? -1 : 1;
                        }
                    }
                    rank[p] = q_rank(std::move(Mx));
                }
                for (size_t p = 0; p <= q; ++p)
                    out.h[p] += Int((long)level[p].size() - (long)rank[p] -
                                    (long)(p ? rank[p - 1] : 0));
            }
            return;
        }
        for (long x = -W; x <= W; ++x) {
            a[i] = x;
            Vec rest = need;
            bool ok = true;
            for (size_t t = 0; t < r && ok; ++t) {
                rest[t] -= Int(x) * ring.var_degrees[i][t];
                if (rest[t] < suf_lo[i + 1][t] || rest[t] > suf_hi[i + 1][t])
                    ok = false;
            }
            if (ok) walk(i + 1, rest);
        }
        a[i] = 0;
    };
    walk(0, d);
    return out;
}

} // namespace multireg
