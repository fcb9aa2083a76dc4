#ifndef MULTIREG_RESOLUTION_HPP
#define MULTIREG_RESOLUTION_HPP

#include "multireg/region.hpp"
#include "multireg/ring.hpp"

namespace multireg {

// Sparse polynomial with rational coefficients, keyed by exponent vector.
// Minimalization introduces rational coefficients even when the input
// matrices are monomial.
struct Poly {
    VecMap<Rat> terms;

    static Poly zero() { return {}; }
    static Poly monomial(const Rat& c, const Vec& e);
    bool is_zero() const { return terms.empty(); }
    bool is_constant(Rat* value = nullptr) const;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_scale(const Rat& c, const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
std::string poly_str(const Ring& ring, const Poly& p);

// A complex of free modules F_0 <- F_1 <- ... ; shifts[p] lists the degree
// of each summand of F_p, maps[p] (for p >= 1) is the matrix of the map
// F_p -> F_{p-1}, rows indexed by F_{p-1} summands.
struct GradedComplex {
    std::vector<std::vector<Vec>> shifts;
    std::vector<std::vector<std::vector<Poly>>> maps; // maps[p][row][col]

    size_t length() const { return shifts.size(); }
};

// Taylor complex of a monomial ideal (level 0 is the ring itself). Refuses
// more than 16 generators.
GradedComplex taylor_complex(const Ring& ring, const std::vector<Vec>& gens);

// Check homogeneity of every entry and vanishing of all compositions;
// returns human-readable problems (empty = valid).
std::vector<std::string> validate_complex(const Ring& ring, const GradedComplex& F);

// Split off all invertible (constant) entries. Deterministic scan order;
// the result has no unit entries. Exactness and homology are preserved.
GradedComplex minimalize_complex(GradedComplex F);

// The twist data: levels[p] = multiset of summand degrees of F_p.
TypeJ extract_type_J(const GradedComplex& F);

// Weighted degree bounds: for coarsening w (with bound b), every level-p
// summand degree d must satisfy w.v * d <= b + p*s + c - 1.
struct BoundViolation {
    size_t which;  // index of the coarsening
    size_t level;  // homological level p
    Vec shift;
    Int lhs, rhs;
};
std::vector<BoundViolation> check_degree_bounds(const GradedComplex& F,
                                                const std::vector<Coarsening>& ws,
                                                const std::vector<Int>& b);

} // namespace multireg

#endif
