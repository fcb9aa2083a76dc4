#include "multireg/linalg.hpp"

namespace multireg {

size_t q_rank(std::vector<QVec> M) {
    if (M.empty()) return 0;
    size_t rows = M.size(), cols = M[0].size();
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t piv = rank;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[rank]);
        Rat inv = 1 / M[rank][c];
        for (size_t j = c; j < cols; ++j) M[rank][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || M[i][c] == 0) continue;
            Rat f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[rank][j];
        }
        ++rank;
    }
    return rank;
}

namespace {

std::vector<Vec> identity(size_t n) {
    std::vector<Vec> I(n, Vec(n, Int(0)));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

} // namespace

Smith smith_form(std::vector<Vec> A) {
    Smith s;
    s.rows = A.size();
    s.cols = s.rows ? A[0].size() : 0;
    s.U = identity(s.rows);
    s.V = identity(s.cols);
    if (s.cols == 0) return s;

    auto row_sub = [&](size_t dst, size_t src, const Int& f) {
        for (size_t j = 0; j < s.cols; ++j) A[dst][j] -= f * A[src][j];
        for (size_t j = 0; j < s.rows; ++j) s.U[dst][j] -= f * s.U[src][j];
    };
    auto col_sub = [&](size_t dst, size_t src, const Int& f) {
        for (size_t i = 0; i < s.rows; ++i) A[i][dst] -= f * A[i][src];
        // V tracks column ops as A <- A * V; a column op on A is a row op on
        // V^T, i.e. V[.,dst] -= f V[.,src], stored row-wise.
        for (size_t i = 0; i < s.cols; ++i) s.V[i][dst] -= f * s.V[i][src];
    };
    auto row_swap = [&](size_t a, size_t b) {
        std::swap(A[a], A[b]);
        std::swap(s.U[a], s.U[b]);
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < s.rows; ++i) std::swap(A[i][a], A[i][b]);
        for (size_t i = 0; i < s.cols; ++i) std::swap(s.V[i][a], s.V[i][b]);
    };

    size_t t = 0;
    while (t < s.rows && t < s.cols) {
        // Locate a nonzero entry of smallest absolute value in the
        // remaining block.
        size_t pi = s.rows, pj = s.cols;
        for (size_t i = t; i < s.rows; ++i)
            for (size_t j = t; j < s.cols; ++j)
                if (A[i][j] != 0 &&
                    (pi == s.rows ||
                     mpz_cmpabs(A[i][j].get_mpz_t(), A[pi][pj].get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == s.rows) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool clean = true;
        for (size_t i = t + 1; i < s.rows; ++i) {
            if (A[i][t] == 0) continue;
            Int f = A[i][t] / A[t][t]; // truncated: remainder smaller than pivot
            if (f != 0) row_sub(i, t, f);
            if (A[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < s.cols; ++j) {
            if (A[t][j] == 0) continue;
            Int f = A[t][j] / A[t][t];
            if (f != 0) col_sub(j, t, f);
            if (A[t][j] != 0) clean = false;
        }
        if (!clean) continue; // smaller pivot now exists; repeat the block
        if (A[t][t] < 0) {
            for (size_t j = 0; j < s.cols; ++j) s.V[j][t] = -s.V[j][t];
            A[t][t] = -A[t][t];
        }
        ++t;
    }
    for (size_t i = 0; i < t; ++i) s.d.push_back(A[i][i]);
    return s;
}

Vec mat_apply(const std::vector<Vec>& M, const Vec& x) {
    Vec y(M.size(), Int(0));
    for (size_t i = 0; i < M.size(); ++i) {
        if (M[i].size() != x.size())
            throw std::invalid_argument("mat_apply: size mismatch");
        for (size_t j = 0; j < x.size(); ++j) y[i] += M[i][j] * x[j];
    }
    return y;
}

bool z_solve(const std::vector<Vec>& A, const Vec& b, Vec& w) {
    if (A.size() != b.size()) throw std::invalid_argument("z_solve: size mismatch");
    Smith s = smith_form(A);
    Vec ub = mat_apply(s.U, b);
    Vec y(s.cols, Int(0));
    for (size_t i = 0; i < ub.size(); ++i) {
        if (i < s.d.size()) {
            if (ub[i] % s.d[i] != 0) return false;
            y[i] = ub[i] / s.d[i];
        } else if (ub[i] != 0) {
            return false;
        }
    }
    w = mat_apply(s.V, y);
    return true;
}

} // namespace multireg
