#ifndef MULTIREG_LP_HPP
#define MULTIREG_LP_HPP

#include "multireg/vec.hpp"

namespace multireg {

// Exact rational simplex on the standard form
//     maximize c.x   subject to   A x = b,  x >= 0.
// Two phases, Bland's rule (no cycling). Sizes here are tiny, so a dense
// tableau is fine.

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value = 0;
    QVec x;
};

LpResult lp_solve(const std::vector<QVec>& A, const QVec& b, const QVec& c);

// max sum(x) over { x : sum_i x_i * cols_i = 0, 0 <= x_i <= 1 }.
// Positive optimum exhibits a nontrivial nonnegative relation among the
// columns; zero optimum proves there is none.
LpResult max_nonneg_relation(const std::vector<Vec>& cols);

// Same feasible set, objective x_index. Used to locate the columns that can
// occur in nonnegative relations.
LpResult max_single_coordinate(const std::vector<Vec>& cols, size_t index);

// Integer functional phi with phi.v >= 1 for every v in vs, when one exists
// (equivalently: no nontrivial nonnegative relation among the vs).
bool find_positive_functional(const std::vector<Vec>& vs, Vec& phi);

} // namespace multireg

#endif
