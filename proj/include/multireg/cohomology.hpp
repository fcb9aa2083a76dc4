#ifndef MULTIREG_COHOMOLOGY_HPP
#define MULTIREG_COHOMOLOGY_HPP

#include "multireg/region.hpp"
#include "multireg/ring.hpp"
#include "multireg/semigroup.hpp"

#include <map>

namespace multireg {

// One sign pattern with nonvanishing local cohomology: the support of
// H^i_B(S) in that pattern is v + N{D}, with multiplicity mult on each
// lattice fiber. D has one generator per ring variable: deg(x_j) off sigma,
// -deg(x_i) on sigma.
struct SupportPiece {
    std::vector<int> sigma;
    long mult = 0;
    Vec v;
    std::vector<Vec> D;
    bool pointed = false;
    Vec psi; // positive functional on D when pointed (finite fibers)
};

// Combinatorial Cech cohomology of the irrelevant ideal, resolved once per
// sign pattern and reused across all degree queries.
class CohCache {
  public:
    CohCache(const Ring& ring, std::vector<Vec> ideal_gens);
    explicit CohCache(const Ring& ring);

    const Ring& ring() const { return *ring_; }
    const std::vector<Vec>& ideal() const { return gens_; }
    size_t length() const { return gens_.size(); }

    // h^0..h^q of the sign-pattern complex (q = number of ideal generators).
    const std::vector<long>& pattern(unsigned sigma_mask);
    const std::vector<SupportPiece>& supports(size_t i);

  private:
    const Ring* ring_;
    std::vector<Vec> gens_;
    std::vector<unsigned> supp_or_; // per generator subset: union of supports
    std::map<unsigned, std::vector<long>> pattern_;
    std::map<size_t, std::vector<SupportPiece>> supports_;
};

// Graded piece dimension; finite=false means the piece has infinite rank.
struct PieceDim {
    bool finite = true;
    Int dim = 0;
};

// dim H^i_B(F)_d for F = (+) S(-shifts[a]).
PieceDim coh_free_piece(CohCache& coh, const std::vector<Vec>& shifts, size_t i,
                        const Vec& d);

// Does (m + NC[j]) miss (shift + support of H^idx_B(S)) for every shift?
// Shifts are summand twist degrees, as in coh_free_piece. Yes = all
// translates avoid every support piece (vanishing certified).
Mem translates_avoid_support(CohCache& coh, size_t idx, long j, const Vec& m,
                             const std::vector<Vec>& shifts);

struct RegAnswer {
    Mem status = Mem::Unknown;
    std::string detail;
};

// Is m in the regularity region of the ring itself?
RegAnswer regS_membership(CohCache& coh, const Vec& m);

// Regularity region of the ring, scanned over the box [lo, hi]. The result
// is exact when a completeness certificate succeeds (standard-basis cone or
// rank-one cone); otherwise gens are correct but flagged with a window note.
Region regS_region(CohCache& coh, const Vec& lo, const Vec& hi);

// Vanishing of H^i_B(M)_d propagated through twist data J of a free
// resolution, using the exact vanishing sets of the ring.
bool resolution_vanishing(CohCache& coh, const TypeJ& J, long i, const Vec& d);

// Same, but against caller-chosen vanishing regions per cohomological index
// (halfspace intersections; the caller asserts they are vanishing sets).
struct Halfspace {
    Vec normal;
    Int rhs; // { x : normal.x >= rhs }
};
using HalfspaceRegion = std::vector<Halfspace>;
bool halfspace_contains(const HalfspaceRegion& H, const Vec& x);
bool resolution_vanishing_with(const TypeJ& J, long i, const Vec& d,
                               const std::map<long, HalfspaceRegion>& V);

// Certified vanishing for an intersection-decomposition family of ideals:
// H^i of the intersection vanishes at d when, for every nonempty subfamily
// I, H^(i+|I|-1) of the sum ideal vanishes at d.
class MVContext {
  public:
    MVContext(const Ring& ring, std::vector<std::vector<Vec>> ideals);
    size_t size() const { return ideals_.size(); }
    CohCache& cache_for(unsigned mask); // nonzero subset mask
    bool vanishes(const std::vector<Vec>& shifts, long i, const Vec& d);

  private:
    const Ring* ring_;
    std::vector<std::vector<Vec>> ideals_;
    std::map<unsigned, CohCache> caches_;
};

// A monomial module F/R: free summands e_a with degree shifts[a], relations
// x^e * e_a spanning R.
struct MonomialModule {
    std::vector<Vec> shifts;
    std::vector<std::pair<size_t, Vec>> relations;
};

struct TorsionDim {
    Int dim = 0;
    bool exact = true;
    std::string note;
};

// Degree-d rank of the B-torsion submodule H^0_B(M). The exact mode uses
// saturation by each ideal generator separately; the iterative mode grows
// the kernel chain until the dimension stabilizes stab_window times and is
// flagged accordingly.
TorsionDim h0_torsion_exact(const Ring& ring, const MonomialModule& M, const Vec& d);
TorsionDim h0_torsion_iterative(const Ring& ring, const MonomialModule& M,
                                const Vec& d, int stab_window);

// Independent witness: ranks of the full Cech complex of a shifted free
// module restricted to fine degrees in the box [-W, W]^n. Recomputes every
// rank from scratch. `conclusive` false when a contributing cell touched
// the box boundary.
struct OracleDim {
    std::vector<Int> h;
    bool conclusive = true;
};
OracleDim cech_oracle_piece(const Ring& ring, const std::vector<Vec>& shifts,
                            const Vec& d, long W);

} // namespace multireg

#endif
