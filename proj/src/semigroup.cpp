#include "multireg/semigroup.hpp"

#include "multireg/linalg.hpp"
#include "multireg/lp.hpp"

#include <stdexcept>
#include <sstream>

namespace multireg {

std::string Pointedness::describe() const {
    if (pointed) return "pointed, functional " + vec_str(phi);
    std::ostringstream os;
    if (zero_gen >= 0) {
        os << "generator #" << zero_gen << " is zero";
        return os.str();
    }
    os << "nonnegative relation ";
    bool first = true;
    for (size_t i = 0; i < relation.size(); ++i) {
        if (relation[i] == 0) continue;
        if (!first) os << " + ";
        os << relation[i].get_str() << "*g" << i;
        first = false;
    }
    os << " = 0";
    return os.str();
}

Pointedness check_pointed(const std::vector<Vec>& gens) {
    if (gens.empty()) throw std::invalid_argument("check_pointed: no generators");
    Pointedness p;
    for (size_t i = 0; i < gens.size(); ++i)
        if (vec_is_zero(gens[i])) {
            p.zero_gen = (int)i;
            return p;
        }
    LpResult rel = max_nonneg_relation(gens);
    if (rel.status != LpStatus::Optimal)
        throw std::logic_error("relation program must have an optimum");
    if (rel.value > 0) {
        p.relation = rel.x;
        return p;
    }
    if (!find_positive_functional(gens, p.phi))
        throw std::logic_error("no functional found for a cone without relations");
    p.pointed = true;
    return p;
}

// ---------------------------------------------------------------------------
// General membership: Z^dim modulo coordinate moduli (0 = free coordinate).

namespace {

struct AbGroup {
    std::vector<Int> moduli;
    size_t dim() const { return moduli.size(); }

    Vec reduce(Vec x) const {
        for (size_t j = 0; j < moduli.size(); ++j)
            if (moduli[j] != 0) {
                x[j] %= moduli[j];
                if (x[j] < 0) x[j] += moduli[j];
            }
        return x;
    }
    bool is_zero(const Vec& x) const {
        return vec_is_zero(x);
    }
    Vec free_part(const Vec& x) const {
        Vec f;
        for (size_t j = 0; j < moduli.size(); ++j)
            if (moduli[j] == 0) f.push_back(x[j]);
        return f;
    }
};

struct BudgetOut {};

// Exhaustive memoized search in the pointed situation: every generator has
// phi-positive free part, so remainders sit at strictly decreasing phi
// levels and the reachable set is finite.
Mem pointed_search(const AbGroup& G, const std::vector<Vec>& gens,
                   const Vec& phi_free, const Vec& h, long& budget,
                   std::vector<Int>& coeffs) {
    std::vector<Int> glevel(gens.size());
    for (size_t i = 0; i < gens.size(); ++i)
        glevel[i] = vec_dot(phi_free, G.free_part(gens[i]));
    VecMap<int> memo; // gen index used on a success path, or -1 for dead

    std::function<bool(const Vec&, const Int&)> dfs =
        [&](const Vec& cur, const Int& level) -> bool {
        if (G.is_zero(cur)) return true;
        auto it = memo.find(cur);
        if (it != memo.end()) return it->second >= 0;
        if (--budget < 0) throw BudgetOut{};
        for (size_t i = 0; i < gens.size(); ++i) {
            if (level < glevel[i]) continue;
            Vec nxt = G.reduce(vec_sub(cur, gens[i]));
            if (dfs(nxt, level - glevel[i])) {
                memo[cur] = (int)i;
                return true;
            }
        }
        memo[cur] = -1;
        return false;
    };

    Int level = vec_dot(phi_free, G.free_part(h));
    if (level < 0) return Mem::No;
    if (!dfs(h, level)) return Mem::No;

    coeffs.assign(gens.size(), Int(0));
    Vec cur = h;
    while (!G.is_zero(cur)) {
        int i = memo.at(cur);
        if (i < 0) throw std::logic_error("witness chain broken in semigroup search");
        coeffs[(size_t)i] += 1;
        cur = G.reduce(vec_sub(cur, gens[(size_t)i]));
    }
    return Mem::Yes;
}

MemberResult member_in_group(const AbGroup& G, const std::vector<Vec>& gens_in,
                             const Vec& h_in, long& budget) {
    MemberResult out;
    out.coeffs.assign(gens_in.size(), Int(0));
    Vec h = G.reduce(h_in);
    if (G.is_zero(h)) {
        out.status = Mem::Yes;
        return out;
    }

    // Drop generators that are zero in this group.
    std::vector<Vec> gens;
    std::vector<size_t> idx; // position in gens_in
    for (size_t i = 0; i < gens_in.size(); ++i) {
        Vec g = G.reduce(gens_in[i]);
        if (!G.is_zero(g)) {
            gens.push_back(g);
            idx.push_back(i);
        }
    }
    if (gens.empty()) {
        out.status = Mem::No;
        return out;
    }

    size_t nfree = 0;
    for (const auto& m : G.moduli)
        if (m == 0) ++nfree;

    // Z = generators that can occur in a nonnegative relation of free parts.
    std::vector<size_t> Z;
    std::vector<QVec> zsol; // one relation per member of Z, support inside Z
    if (nfree == 0) {
        for (size_t i = 0; i < gens.size(); ++i) {
            Z.push_back(i);
            QVec e(gens.size(), Rat(0));
            e[i] = 1;
            zsol.push_back(e); // pure torsion: order * e_i is a relation,
                               // handled by the lcm scaling below
        }
    } else {
        std::vector<Vec> free_cols;
        for (const auto& g : gens) free_cols.push_back(G.free_part(g));
        for (size_t i = 0; i < gens.size(); ++i) {
            LpResult r = max_single_coordinate(free_cols, i);
            if (r.status != LpStatus::Optimal)
                throw std::logic_error("coordinate program must have an optimum");
            if (r.value > 0) {
                Z.push_back(i);
                zsol.push_back(r.x);
            }
        }
    }

    if (Z.empty()) {
        std::vector<Vec> free_cols;
        for (const auto& g : gens) free_cols.push_back(G.free_part(g));
        Vec phi;
        if (!find_positive_functional(free_cols, phi))
            throw std::logic_error("residual cone should be pointed");
        std::vector<Int> c;
        Mem st = pointed_search(G, gens, phi, h, budget, c);
        out.status = st;
        if (st == Mem::Yes)
            for (size_t i = 0; i < gens.size(); ++i) out.coeffs[idx[i]] = c[i];
        return out;
    }

    // Quotient by the subgroup spanned by gens[Z]; columns of the relation
    // matrix are their lifts plus the moduli vectors of torsion coordinates.
    size_t dim = G.dim();
    std::vector<Vec> cols;
    for (size_t zi : Z) cols.push_back(gens[zi]);
    std::vector<size_t> torsion_coords;
    for (size_t j = 0; j < dim; ++j)
        if (G.moduli[j] != 0) {
            Vec e(dim, Int(0));
            e[j] = G.moduli[j];
            cols.push_back(e);
            torsion_coords.push_back(j);
        }
    std::vector<Vec> A(dim, Vec(cols.size(), Int(0)));
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < dim; ++i) A[i][j] = cols[j][i];
    Smith sm = smith_form(A);

    // New group: coordinate i of y = U x carries modulus d_i (i < rank,
    // dropped when d_i = 1) and is free for i >= rank.
    AbGroup Q;
    std::vector<size_t> keep;
    for (size_t i = 0; i < dim; ++i) {
        Int m = (i < sm.d.size()) ? sm.d[i] : Int(0);
        if (m == 1) continue;
        keep.push_back(i);
        Q.moduli.push_back(m);
    }
    auto project = [&](const Vec& x) {
        Vec y = mat_apply(sm.U, x);
        Vec out2;
        for (size_t i : keep) out2.push_back(y[i]);
        return Q.reduce(out2);
    };

    std::vector<Vec> qgens;
    std::vector<size_t> rest; // positions (in gens) of non-Z generators
    {
        std::vector<bool> inZ(gens.size(), false);
        for (size_t zi : Z) inZ[zi] = true;
        for (size_t i = 0; i < gens.size(); ++i)
            if (!inZ[i]) {
                rest.push_back(i);
                qgens.push_back(project(gens[i]));
            }
    }
    MemberResult sub = member_in_group(Q, qgens, project(h), budget);
    out.status = sub.status;
    if (sub.status != Mem::Yes) return out;

    // Witness pullback. v = h - sum(rest coefficients) must be an integer
    // combination of the relation columns; solve exactly, then shift the
    // Z part nonnegative with an integer relation vector that is positive
    // on Z and zero elsewhere.
    Vec v = h;
    for (size_t k = 0; k < rest.size(); ++k) {
        size_t i = rest[k];
        out.coeffs[idx[i]] = sub.coeffs[k];
        for (size_t j = 0; j < dim; ++j) v[j] -= sub.coeffs[k] * gens[i][j];
    }
    Vec sol;
    if (!z_solve(A, v, sol))
        throw std::logic_error("subgroup system must be solvable for its own element");

    // Integer relation xi >= 0 with xi_i >= 1 exactly on Z: sum the per-index
    // relations, clear denominators, then scale by the lcm of the moduli so
    // the torsion parts cancel too.
    QVec acc(gens.size(), Rat(0));
    for (const auto& s : zsol)
        for (size_t i = 0; i < gens.size(); ++i) acc[i] += s[i];
    Int den = 1;
    for (auto& a : acc) {
        a.canonicalize();
        den = lcm(den, a.get_den());
    }
    Int N = 1;
    for (const auto& m : G.moduli)
        if (m != 0) N = lcm(N, m);
    std::vector<Int> xi(gens.size(), Int(0));
    for (size_t i = 0; i < gens.size(); ++i)
        xi[i] = acc[i].get_num() * (den / acc[i].get_den()) * N;

    // How far to shift: coefficient sol[k] for Z-member zi = Z[k].
    Int shift = 0;
    for (size_t k = 0; k < Z.size(); ++k) {
        if (sol[k] >= 0) continue;
        Int need = (-sol[k] + xi[Z[k]] - 1) / xi[Z[k]]; // ceil division
        if (need > shift) shift = need;
    }
    for (size_t k = 0; k < Z.size(); ++k)
        out.coeffs[idx[Z[k]]] = sol[k] + shift * xi[Z[k]];
    // Generators outside Z can appear in xi only with coefficient zero, so
    // the rest coefficients are untouched.
    return out;
}

long member_budget() { return cap_from_env("MULTIREG_MEMBER_CAP", 200000); }

} // namespace

MemberResult semigroup_member(const std::vector<Vec>& C, const Vec& d) {
    if (C.empty()) {
        MemberResult r;
        r.status = vec_is_zero(d) ? Mem::Yes : Mem::No;
        return r;
    }
    Pointedness p = check_pointed(C);
    if (!p.pointed)
        throw std::invalid_argument("semigroup_member: cone not pointed: " +
                                    p.describe());
    if (!C.empty()) check_rank(d, C[0]);
    AbGroup G;
    G.moduli.assign(d.size(), Int(0));
    long budget = member_budget();
    try {
        return member_in_group(G, C, d, budget);
    } catch (const BudgetOut&) {
        return MemberResult{};
    }
}

MemberResult group_member(const std::vector<Vec>& gens, const Vec& h) {
    for (const auto& g : gens) check_rank(g, h);
    AbGroup G;
    G.moduli.assign(h.size(), Int(0));
    long budget = member_budget();
    try {
        return member_in_group(G, gens, h, budget);
    } catch (const BudgetOut&) {
        return MemberResult{};
    }
}

// ---------------------------------------------------------------------------

namespace {

void fiber_walk(const std::vector<Vec>& cols, const std::vector<Int>& level,
                size_t k, Vec rem, Int budget, std::vector<Int>& partial,
                const std::function<void(const std::vector<Int>&)>& emit) {
    if (k == cols.size()) {
        if (vec_is_zero(rem)) emit(partial);
        return;
    }
    // x_k from 0 up to what the phi budget allows; rem tracks target minus
    // the part already committed.
    Int maxc = budget / level[k];
    for (Int x = 0; x <= maxc; ++x) {
        partial[k] = x;
        fiber_walk(cols, level, k + 1, rem, budget - x * level[k], partial, emit);
        for (size_t j = 0; j < rem.size(); ++j) rem[j] -= cols[k][j];
    }
    partial[k] = 0;
}

} // namespace

std::vector<std::vector<Int>>
fiber_solutions(const std::vector<Vec>& cols, const Vec& target, const Vec& psi,
                long cap) {
    std::vector<std::vector<Int>> out;
    std::vector<Int> level(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
        check_rank(cols[i], target);
        level[i] = vec_dot(psi, cols[i]);
        if (level[i] < 1)
            throw std::invalid_argument("fiber_solutions: functional not positive");
    }
    Int budget = vec_dot(psi, target);
    if (budget < 0) return out;
    std::vector<Int> partial(cols.size(), Int(0));
    fiber_walk(cols, level, 0, target, budget, partial,
               [&](const std::vector<Int>& sol) {
                   if ((long)out.size() >= cap)
                       throw CapExceeded("fiber_solutions: cap exceeded");
                   out.push_back(sol);
               });
    return out;
}

std::optional<std::vector<Int>>
first_fiber_solution(const std::vector<Vec>& cols, const Vec& target,
                     const Vec& psi) {
    struct Found {
        std::vector<Int> sol;
    };
    std::vector<Int> level(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
        check_rank(cols[i], target);
        level[i] = vec_dot(psi, cols[i]);
        if (level[i] < 1)
            throw std::invalid_argument("first_fiber_solution: functional not positive");
    }
    Int budget = vec_dot(psi, target);
    if (budget < 0) return std::nullopt;
    std::vector<Int> partial(cols.size(), Int(0));
    try {
        fiber_walk(cols, level, 0, target, budget, partial,
                   [&](const std::vector<Int>& sol) { throw Found{sol}; });
    } catch (const Found& f) {
        return f.sol;
    }
    return std::nullopt;
}

Int fiber_count(const std::vector<Vec>& cols, const Vec& target, const Vec& psi) {
    std::vector<Int> level(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
        check_rank(cols[i], target);
        level[i] = vec_dot(psi, cols[i]);
        if (level[i] < 1)
            throw std::invalid_argument("fiber_count: functional not positive");
    }
    Int budget = vec_dot(psi, target);
    Int n = 0;
    if (budget < 0) return n;
    std::vector<Int> partial(cols.size(), Int(0));
    fiber_walk(cols, level, 0, target, budget, partial,
               [&](const std::vector<Int>&) { n += 1; });
    return n;
}

} // namespace multireg
