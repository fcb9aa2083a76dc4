#ifndef MULTIREG_RING_HPP
#define MULTIREG_RING_HPP

#include "multireg/vec.hpp"

#include <iosfwd>

namespace multireg {

// A multigraded polynomial ring presentation: variable degrees in Z^rank,
// a monomial ideal B given by exponent vectors, and the cone generators C
// used for the region calculus. Optional extras: fan cones (variable index
// sets) and a declared regularity region for the ring itself.
struct Ring {
    size_t rank = 0;
    std::vector<std::string> var_names;
    std::vector<Vec> var_degrees;
    std::vector<Vec> ideal;  // exponent vectors, minimal under divisibility
    std::vector<Vec> config; // C, pointed
    Vec grading_phi;         // integer functional, grading_phi . deg(x) >= 1
    std::vector<std::vector<int>> fan_cones;
    std::vector<Vec> regS_hint;

    size_t nvars() const { return var_names.size(); }
    Vec degree_of_expo(const Vec& e) const;
    std::string monomial_str(const Vec& e) const;
    int var_index(const std::string& name) const;
};

// All parse/validation problems at once, each tagged with its line.
struct RingSpecError : std::runtime_error {
    std::vector<std::string> errors;
    explicit RingSpecError(std::vector<std::string> errs);
};

Ring load_ring(std::istream& in);
Ring load_ring_file(const std::string& path);

// Weight data of a coarsening functional v: per-variable v-degrees must be
// nonnegative (else this is not a coarsening of the grading). c is the lcm
// of the positive variable degrees, s the level step used in resolution
// degree bounds.
struct Coarsening {
    Vec v;
    std::vector<Int> var_deg;
    bool positive = false;
    std::vector<int> pos_vars;
    Int c = 0;
    Int s = 0;
};

Coarsening classify_coarsening(const Ring& ring, const Vec& v);

// Exponent vectors of the monomials of a given degree, in deterministic
// order. Throws CapExceeded past cap.
std::vector<Vec> monomials_of_degree(const Ring& ring, const Vec& d, long cap);

// Drop exponent vectors divisible by another one in the list.
std::vector<Vec> minimalize_monomials(std::vector<Vec> gens);

bool divides(const Vec& a, const Vec& b); // componentwise a <= b

} // namespace multireg

#endif
