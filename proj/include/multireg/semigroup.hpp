#ifndef MULTIREG_SEMIGROUP_HPP
#define MULTIREG_SEMIGROUP_HPP

#include "multireg/vec.hpp"

#include <functional>
#include <optional>

namespace multireg {

// Pointedness of the cone spanned by a generator list: pointed means some
// integer functional phi has phi.g >= 1 for every generator. When not
// pointed we return a concrete obstruction: a zero generator or a nontrivial
// nonnegative rational relation among the generators.
struct Pointedness {
    bool pointed = false;
    Vec phi;
    int zero_gen = -1;
    QVec relation;
    std::string describe() const;
};

Pointedness check_pointed(const std::vector<Vec>& gens);

enum class Mem { Yes, No, Unknown };

struct MemberResult {
    Mem status = Mem::Unknown;
    std::vector<Int> coeffs; // witness when Yes: target = sum coeffs[i]*gens[i]
};

// Membership of d in the semigroup generated by C inside Z^r, for pointed C.
// Throws std::invalid_argument (with the obstruction) when C is not pointed.
MemberResult semigroup_member(const std::vector<Vec>& C, const Vec& d);

// Membership for arbitrary generator lists, no pointedness assumed. Exact:
// generators that can occur in nonnegative relations span a subgroup, which
// gets quotiented away (Smith form); the residual pointed part is searched
// exhaustively. Unknown only on search-budget overrun.
MemberResult group_member(const std::vector<Vec>& gens, const Vec& h);

// All x in N^k with sum x_i cols_i = target. psi.cols_i >= 1 for every i
// certifies finiteness; pass the functional from check_pointed/
// find_positive_functional. Throws CapExceeded past cap solutions.
std::vector<std::vector<Int>>
fiber_solutions(const std::vector<Vec>& cols, const Vec& target, const Vec& psi,
                long cap);

// Fiber count without materializing (same enumeration).
Int fiber_count(const std::vector<Vec>& cols, const Vec& target, const Vec& psi);

// First solution in the deterministic enumeration order, if any.
std::optional<std::vector<Int>>
first_fiber_solution(const std::vector<Vec>& cols, const Vec& target, const Vec& psi);

} // namespace multireg

#endif
