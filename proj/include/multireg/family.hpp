#ifndef MULTIREG_FAMILY_HPP
#define MULTIREG_FAMILY_HPP

#include "multireg/coarsen.hpp"
#include "multireg/cohomology.hpp"
#include "multireg/resolution.hpp"
#include "multireg/ring.hpp"

#include <map>
#include <optional>

namespace multireg {

// Decomposition of the irrelevant ideal from the fan: primitive collections
// P_1..P_t of ray indices (rays correspond to variables, in order), with
// B_i generated by the collection's variables and B_I the sum over a
// nonempty subfamily I. Each collection may carry a coarsening functional
// v_i that is positive exactly on its own variables ("orthogonal"); the
// subfamily functionals are v_I = sum of the v_i with i in I.
struct IdealFamily {
    std::vector<std::vector<int>> collections;
    std::vector<std::optional<Vec>> v;
    bool orthogonal = false;
    std::string no_orthogonal_reason;
};

// Enumerate the primitive collections of the ring's fan (subsets of rays
// contained in no cone all of whose proper subsets lie in some cone) and
// attempt the orthogonal functionals. Requires fan_cone lines in the ring
// file; refuses more than 20 rays.
IdealFamily primitive_collections(const Ring& ring);

// Re-check the orthogonality invariant for the stored functionals: each v_i
// must satisfy v_i . deg(x_k) > 0 for k in P_i and = 0 otherwise. Returns
// an error message, or empty when the invariant holds for every collection.
std::string validate_orthogonality(const Ring& ring, const IdealFamily& fam);

// Sorted variable indices of B_I for the subfamily mask (bit i = P_{i+1}).
std::vector<int> family_union_vars(const IdealFamily& fam, unsigned mask);
// Generators of B_I (one exponent vector per variable in the union).
std::vector<Vec> family_ideal(const Ring& ring, const IdealFamily& fam,
                              unsigned mask);
// v_I for the mask; requires every collection in the mask to carry a
// functional (throws std::invalid_argument otherwise).
Vec family_functional(const IdealFamily& fam, unsigned mask, size_t rank);
// Printable name of a subfamily, e.g. "{P1,P3}".
std::string family_mask_str(unsigned mask);

// Lazy cohomology caches for the ideals B_I, one per subfamily mask.
class FamilyContext {
  public:
    FamilyContext(const Ring& ring, IdealFamily fam);
    const Ring& ring() const { return *ring_; }
    const IdealFamily& family() const { return fam_; }
    size_t size() const { return fam_.collections.size(); }
    unsigned full_mask() const { return (1u << fam_.collections.size()) - 1u; }
    CohCache& cache_for(unsigned mask);

  private:
    const Ring* ring_;
    IdealFamily fam_;
    std::map<unsigned, CohCache> caches_;
};

struct FamilyAnswer {
    Mem status = Mem::Unknown;
    bool certified_only = false; // resolution input: Yes is one-directional
    std::string detail;          // first obstruction or refusal
};

// Family regularity at m: for every nonempty subfamily I and every i >= 0
// with i + |I| - 1 within the Cech length of B_I, the translate set
// m + NC[1-i] must avoid the support of H^(i+|I|-1) of B_I applied to M.
// Membership here implies membership in the plain regularity region.
FamilyAnswer regstar_membership(FamilyContext& ctx, const ModuleData& M,
                                const Vec& m);

// Coarse-functional criterion: for every nonempty I the halfplane test with
// v_I at k = 1 certifies the vanishing, which implies family regularity and
// hence plain regularity of m. Refused when the family has no functionals
// or some v_I is negative on a cone generator.
FamilyAnswer regBv_membership(FamilyContext& ctx, const ModuleData& M,
                              const Vec& m);

// End-to-end pipeline over a free resolution F of M: validates that the
// functionals are orthogonal, that each supplied bound b_I dominates the
// coarse regularity number of v_I, and that
//   v_I . m <= b_I + (1 - i)(c_I - step(1, i))   for i = 0..nvars;
// then checks regBv membership of m, emits the level sets
//   J'_p = { d : v_I . d <= b_I + p s_I + c_I - 1 for all I }
// as halfspace regions, and tests the actual resolution degrees against
// them. Bounds b are indexed by subfamily mask - 1 (mask order 1..2^t-1).
struct VresReport {
    bool applicable = true;
    std::string refusal;
    bool upper_bound_mode = false; // some vregnum known only as upper bound
    std::vector<std::string> notes;
    std::vector<std::string> failures; // precondition / inequality failures
    FamilyAnswer regv;
    std::vector<HalfspaceRegion> level_sets; // J'_p for p = 0..length-1
    std::vector<BoundViolation> violations;
    bool bounds_ok = false;
    bool pass = false;
};

VresReport vres_pipeline(FamilyContext& ctx, const GradedComplex& F,
                         const Vec& m, const std::vector<Int>& b);

} // namespace multireg

#endif
