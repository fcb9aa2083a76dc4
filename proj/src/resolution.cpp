#include "multireg/resolution.hpp"

#include <sstream>

namespace multireg {

Poly Poly::monomial(const Rat& c, const Vec& e) {
    Poly p;
    if (c != 0) p.terms[e] = c;
    return p;
}

bool Poly::is_constant(Rat* value) const {
    if (terms.size() != 1) return false;
    const auto& [e, c] = *terms.begin();
    if (!vec_is_zero(e)) return false;
    if (value) *value = c;
    return true;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.terms) {
        auto it = r.terms.find(e);
        if (it == r.terms.end()) {
            r.terms[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

Poly poly_scale(const Rat& c, const Poly& a) {
    Poly r;
    if (c == 0) return r;
    for (const auto& [e, k] : a.terms) r.terms[e] = c * k;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            Vec e = vec_add(ea, eb);
            auto it = r.terms.find(e);
            if (it == r.terms.end()) {
                Rat c = ca * cb;
                if (c != 0) r.terms[e] = c;
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

std::string poly_str(const Ring& ring, const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        if (!first) os << " + ";
        first = false;
        if (c != 1 || vec_is_zero(e)) {
            os << c.get_str();
            if (!vec_is_zero(e)) os << "*";
        }
        if (!vec_is_zero(e)) os << ring.monomial_str(e);
    }
    return os.str();
}

// ---------------------------------------------------------------------------

GradedComplex taylor_complex(const Ring& ring, const std::vector<Vec>& gens_in) {
    std::vector<Vec> gens = minimalize_monomials(gens_in);
    size_t q = gens.size();
    if (q == 0) throw std::invalid_argument("taylor_complex: no generators");
    if (q > 16) throw CapExceeded("taylor_complex: more than 16 generators");
    size_t n = ring.nvars();

    auto lcm_of = [&](unsigned mask) {
        Vec e(n, Int(0));
        for (size_t j = 0; j < q; ++j)
            if (mask & (1u << j))
                for (size_t k = 0; k < n; ++k)
                    if (gens[j][k] > e[k]) e[k] = gens[j][k];
        return e;
    };

    // level p: subset masks of size p in increasing mask order
    std::vector<std::vector<unsigned>> level(q + 1);
    for (unsigned mask = 0; mask < (1u << q); ++mask)
        level[(size_t)__builtin_popcount(mask)].push_back(mask);

    GradedComplex F;
    F.shifts.resize(q + 1);
    F.maps.resize(q + 1);
    for (size_t p = 0; p <= q; ++p)
        for (unsigned mask : level[p])
            F.shifts[p].push_back(ring.degree_of_expo(lcm_of(mask)));

    for (size_t p = 1; p <= q; ++p) {
        auto& M = F.maps[p];
        M.assign(level[p - 1].size(),
                 std::vector<Poly>(level[p].size(), Poly::zero()));
        for (size_t col = 0; col < level[p].size(); ++col) {
            unsigned T = level[p][col];
            Vec lT = lcm_of(T);
            int pos = 0;
            for (size_t j = 0; j < q; ++j) {
                if (!(T & (1u << j))) continue;
                unsigned T2 = T & ~(1u << j);
                auto it = std::lower_bound(level[p - 1].begin(),
                                           level[p - 1].end(), T2);
                size_t row = (size_t)(it - level[p - 1].begin());
                Vec quotient = vec_sub(lT, lcm_of(T2));
                M[row][col] = Poly::monomial(pos % 2 ? Rat(-1) : Rat(1), quotient);
                ++pos;
            }
        }
    }
    return F;
}

std::vector<std::string> validate_complex(const Ring& ring,
                                          const GradedComplex& F) {
    std::vector<std::string> bad;
    bool shapes_ok = true;
    for (size_t p = 1; p < F.length(); ++p) {
        const auto& M = F.maps[p];
        if (!F.shifts[p].empty() && M.size() != F.shifts[p - 1].size()) {
            bad.push_back("level " + std::to_string(p) + ": row count mismatch");
            shapes_ok = false;
            continue;
        }
        for (size_t i = 0; i < M.size(); ++i) {
            if (M[i].size() != F.shifts[p].size()) {
                bad.push_back("level " + std::to_string(p) + ": column count mismatch");
                shapes_ok = false;
                break;
            }
            for (size_t j = 0; j < M[i].size(); ++j) {
                Vec want = vec_sub(F.shifts[p][j], F.shifts[p - 1][i]);
                for (const auto& [e, c] : M[i][j].terms) {
                    bool nonneg = true;
                    for (const auto& x : e)
                        if (x < 0) nonneg = false;
                    if (!nonneg)
                        bad.push_back("level " + std::to_string(p) + " entry (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "): negative exponent");
                    else if (ring.degree_of_expo(e) != want)
                        bad.push_back("level " + std::to_string(p) + " entry (" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "): term " + ring.monomial_str(e) +
                                      " is not homogeneous for the shifts");
                }
            }
        }
    }
    if (!shapes_ok) return bad;
    for (size_t p = 2; p < F.length(); ++p) {
        const auto& A = F.maps[p - 1]; // F_{p-1} -> F_{p-2}
        const auto& B = F.maps[p];     // F_p -> F_{p-1}
        if (A.empty() || B.empty()) continue;
        for (size_t i = 0; i < A.size(); ++i)
            for (size_t j = 0; j < (B.empty() ? 0 : B[0].size()); ++j) {
                Poly acc;
                for (size_t k = 0; k < B.size(); ++k)
                    acc = poly_add(acc, poly_mul(A[i][k], B[k][j]));
                if (!acc.is_zero())
                    bad.push_back("composition F_" + std::to_string(p) + " -> F_" +
                                  std::to_string(p - 2) + " nonzero at (" +
                                  std::to_string(i) + "," + std::to_string(j) + ")");
            }
    }
    return bad;
}

// ---------------------------------------------------------------------------

namespace {

void drop_row(std::vector<std::vector<Poly>>& M, size_t i) {
    M.erase(M.begin() + (long)i);
}

void drop_col(std::vector<std::vector<Poly>>& M, size_t j) {
    for (auto& row : M) row.erase(row.begin() + (long)j);
}

} // namespace

GradedComplex minimalize_complex(GradedComplex F) {
    for (;;) {
        size_t p = 0, pi = 0, pj = 0;
        Rat unit;
        bool found = false;
        for (p = 1; p < F.length() && !found; ++p) {
            const auto& M = F.maps[p];
            for (size_t i = 0; i < M.size() && !found; ++i)
                for (size_t j = 0; j < M[i].size() && !found; ++j)
                    if (M[i][j].is_constant(&unit)) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
        }
        if (!found) {
            while (F.length() > 1 && F.shifts.back().empty()) {
                F.shifts.pop_back();
                F.maps.pop_back();
            }
            return F;
        }
        --p; // loop incremented past the hit

        auto& M = F.maps[p];
        Rat inv = 1 / unit;
        for (size_t k = 0; k < M.size(); ++k) {
            if (k == pi) continue;
            if (M[k][pj].is_zero()) continue;
            Poly factor = poly_scale(-inv, M[k][pj]);
            for (size_t l = 0; l < M[k].size(); ++l) {
                if (l == pj) continue;
                if (M[pi][l].is_zero()) continue;
                M[k][l] = poly_add(M[k][l], poly_mul(factor, M[pi][l]));
            }
        }
        drop_row(M, pi);
        drop_col(M, pj);
        F.shifts[p].erase(F.shifts[p].begin() + (long)pj);
        F.shifts[p - 1].erase(F.shifts[p - 1].begin() + (long)pi);
        if (p + 1 < F.length() && !F.maps[p + 1].empty())
            drop_row(F.maps[p + 1], pj);
        if (p >= 2 && !F.maps[p - 1].empty()) drop_col(F.maps[p - 1], pi);
    }
}

TypeJ extract_type_J(const GradedComplex& F) {
    TypeJ J;
    J.levels = F.shifts;
    while (!J.levels.empty() && J.levels.back().empty()) J.levels.pop_back();
    return J;
}

std::vector<BoundViolation> check_degree_bounds(const GradedComplex& F,
                                                const std::vector<Coarsening>& ws,
                                                const std::vector<Int>& b) {
    if (ws.size() != b.size())
        throw std::invalid_argument("check_degree_bounds: bounds count mismatch");
    std::vector<BoundViolation> out;
    for (size_t w = 0; w < ws.size(); ++w)
        for (size_t p = 0; p < F.length(); ++p)
            for (const Vec& d : F.shifts[p]) {
                Int lhs = vec_dot(ws[w].v, d);
                Int rhs = b[w] + Int((long)p) * ws[w].s + ws[w].c - 1;
                if (lhs > rhs) out.push_back({w, p, d, lhs, rhs});
            }
    return out;
}

} // namespace multireg
