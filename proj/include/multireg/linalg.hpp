#ifndef MULTIREG_LINALG_HPP
#define MULTIREG_LINALG_HPP

#include "multireg/vec.hpp"

namespace multireg {

// Matrices are row lists. All arithmetic is exact.

size_t q_rank(std::vector<QVec> M);

// Smith normal form  U * A * V = diag(d)  with U, V unimodular.
// d holds the nonzero diagonal entries (all positive); their count is the
// rank. No divisibility chain is enforced; callers only need the diagonal.
struct Smith {
    std::vector<Vec> U; // rows x rows
    std::vector<Vec> V; // cols x cols
    std::vector<Int> d;
    size_t rows = 0, cols = 0;
};

Smith smith_form(std::vector<Vec> A);

// Some integral solution of A w = b, if one exists.
bool z_solve(const std::vector<Vec>& A, const Vec& b, Vec& w);

Vec mat_apply(const std::vector<Vec>& M, const Vec& x); // M * x

} // namespace multireg

#endif
