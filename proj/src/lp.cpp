#include "multireg/lp.hpp"

#include <stdexcept>

namespace multireg {

namespace {

// Dense tableau: rows[i] has ncols entries plus rhs at the back.
// basis[i] = variable index basic in row i. obj = reduced-cost row with the
// current objective value (negated offset) at the back.

struct Tableau {
    size_t ncols = 0;
    std::vector<QVec> rows;
    std::vector<size_t> basis;
    QVec obj; // size ncols + 1; obj.back() = current objective value

    void pivot(size_t r, size_t c) {
        QVec& prow = rows[r];
        Rat inv = 1 / prow[c];
        for (auto& e : prow) e *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rat f = rows[i][c];
            if (f == 0) continue;
            for (size_t j = 0; j <= ncols; ++j) rows[i][j] -= f * prow[j];
        }
        Rat f = obj[c];
        if (f != 0)
            for (size_t j = 0; j <= ncols; ++j) obj[j] -= f * prow[j];
        basis[r] = c;
    }

    // Bland: entering = lowest-index column with positive reduced cost;
    // leaving = min ratio, ties by lowest basic variable index.
    // Returns false when unbounded.
    bool run(bool* unbounded) {
        *unbounded = false;
        for (;;) {
            size_t enter = ncols;
            for (size_t j = 0; j < ncols; ++j)
                if (obj[j] > 0) { enter = j; break; }
            if (enter == ncols) return true;
            size_t leave = rows.size();
            Rat best = 0;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rat ratio = rows[i][ncols] / rows[i][enter];
                if (leave == rows.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) { *unbounded = true; return false; }
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult lp_solve(const std::vector<QVec>& A, const QVec& b, const QVec& c) {
    size_t m = A.size(), n = c.size();
    for (const auto& row : A)
        if (row.size() != n) throw std::invalid_argument("lp_solve: ragged matrix");
    if (b.size() != m) throw std::invalid_argument("lp_solve: rhs size mismatch");

    LpResult res;
    if (m == 0) {
        // No constraints: optimum 0 at x=0 unless some cost is positive.
        for (size_t j = 0; j < n; ++j)
            if (c[j] > 0) { res.status = LpStatus::Unbounded; return res; }
        res.status = LpStatus::Optimal;
        res.value = 0;
        res.x.assign(n, Rat(0));
        return res;
    }

    // Phase 1: artificials n..n+m-1, maximize -(sum of artificials).
    Tableau t;
    t.ncols = n + m;
    t.rows.assign(m, QVec(t.ncols + 1, Rat(0)));
    t.basis.resize(m);
    for (size_t i = 0; i < m; ++i) {
        Rat s = (b[i] < 0) ? Rat(-1) : Rat(1);
        for (size_t j = 0; j < n; ++j) t.rows[i][j] = s * A[i][j];
        t.rows[i][n + i] = 1;
        t.rows[i][t.ncols] = s * b[i];
        t.basis[i] = n + i;
    }
    // Canonical reduced costs: for objective -sum(artificials), the reduced
    // cost row equals the column sums of the constraint rows on the
    // non-artificial part, with value = sum of rhs.
    t.obj.assign(t.ncols + 1, Rat(0));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= t.ncols; ++j)
            if (j < n || j == t.ncols) t.obj[j] += t.rows[i][j];
    bool unbounded = false;
    t.run(&unbounded);
    if (unbounded) throw std::logic_error("phase-1 simplex objective cannot be unbounded");
    if (t.obj[t.ncols] != 0) { res.status = LpStatus::Infeasible; return res; }

    // Drive leftover artificials out of the basis; rows that cannot pivot are
    // redundant and get dropped.
    for (size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < n) { ++i; continue; }
        size_t piv = n;
        for (size_t j = 0; j < n; ++j)
            if (t.rows[i][j] != 0) { piv = j; break; }
        if (piv < n) {
            t.pivot(i, piv);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + (long)i);
            t.basis.erase(t.basis.begin() + (long)i);
        }
    }

    // Phase 2: real objective on the original n columns.
    for (auto& row : t.rows) {
        row[n] = row[t.ncols]; // move rhs next to the kept columns
        row.resize(n + 1);
    }
    t.ncols = n;
    t.obj.assign(n + 1, Rat(0));
    for (size_t j = 0; j < n; ++j) t.obj[j] = c[j];
    for (size_t i = 0; i < t.rows.size(); ++i) {
        Rat f = c[t.basis[i]];
        if (f == 0) continue;
        for (size_t j = 0; j <= n; ++j) t.obj[j] -= f * t.rows[i][j];
    }
    // obj.back() currently holds -(objective value); keep that convention and
    // read it off negated at the end.
    t.run(&unbounded);
    if (unbounded) { res.status = LpStatus::Unbounded; return res; }

    res.status = LpStatus::Optimal;
    res.x.assign(n, Rat(0));
    for (size_t i = 0; i < t.rows.size(); ++i)
        res.x[t.basis[i]] = t.rows[i][n];
    res.value = -t.obj[n];
    return res;
}

namespace {

// Shared constraint block for the box { sum x_i cols_i = 0, 0 <= x <= 1 }:
// variables are x (k of them) followed by slacks s (k), rows are the r
// lattice coordinates then x_i + s_i = 1.
void box_program(const std::vector<Vec>& cols, std::vector<QVec>& A, QVec& b) {
    size_t k = cols.size();
    size_t r = k ? cols[0].size() : 0;
    A.assign(r + k, QVec(2 * k, Rat(0)));
    b.assign(r + k, Rat(0));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < k; ++j) A[i][j] = Rat(cols[j][i]);
    for (size_t j = 0; j < k; ++j) {
        A[r + j][j] = 1;
        A[r + j][k + j] = 1;
        b[r + j] = 1;
    }
}

} // namespace

LpResult max_nonneg_relation(const std::vector<Vec>& cols) {
    std::vector<QVec> A;
    QVec b;
    box_program(cols, A, b);
    QVec c(2 * cols.size(), Rat(0));
    for (size_t j = 0; j < cols.size(); ++j) c[j] = 1;
    LpResult res = lp_solve(A, b, c);
    res.x.resize(cols.size());
    return res;
}

LpResult max_single_coordinate(const std::vector<Vec>& cols, size_t index) {
    std::vector<QVec> A;
    QVec b;
    box_program(cols, A, b);
    QVec c(2 * cols.size(), Rat(0));
    c.at(index) = 1;
    LpResult res = lp_solve(A, b, c);
    res.x.resize(cols.size());
    return res;
}

bool find_positive_functional(const std::vector<Vec>& vs, Vec& phi) {
    if (vs.empty()) { phi.clear(); return true; }
    size_t r = vs[0].size();
    size_t k = vs.size();
    // Feasibility of phi.v >= 1 for all v: variables p, q (phi = p - q) and
    // surplus t, rows  (p - q).v_i - t_i = 1.
    std::vector<QVec> A(k, QVec(2 * r + k, Rat(0)));
    QVec b(k, Rat(1));
    for (size_t i = 0; i < k; ++i) {
        check_rank(vs[i], vs[0]);
        for (size_t j = 0; j < r; ++j) {
            A[i][j] = Rat(vs[i][j]);
            A[i][r + j] = -Rat(vs[i][j]);
        }
        A[i][2 * r + i] = -1;
    }
    QVec c(2 * r + k, Rat(0));
    LpResult res = lp_solve(A, b, c);
    if (res.status != LpStatus::Optimal) return false;
    QVec q(r);
    Int den = 1;
    for (size_t j = 0; j < r; ++j) {
        q[j] = res.x[j] - res.x[r + j];
        q[j].canonicalize();
        den = lcm(den, q[j].get_den());
    }
    phi.assign(r, Int(0));
    for (size_t j = 0; j < r; ++j) phi[j] = q[j].get_num() * (den / q[j].get_den());
    return true;
}

} // namespace multireg
