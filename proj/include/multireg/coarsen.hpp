#ifndef MULTIREG_COARSEN_HPP
#define MULTIREG_COARSEN_HPP

#include "multireg/cohomology.hpp"
#include "multireg/region.hpp"
#include "multireg/ring.hpp"

namespace multireg {

// Module input for the coarse-grading queries: either an honest free module
// (exact answers) or the twist data of a free resolution, in which case
// positive answers are certificates only (vanishing propagated through the
// resolution) and get flagged.
struct ModuleData {
    bool free = true;
    std::vector<Vec> shifts;
    TypeJ J;

    static ModuleData free_module(std::vector<Vec> s) {
        ModuleData m;
        m.free = true;
        m.shifts = std::move(s);
        return m;
    }
    static ModuleData from_type_J(TypeJ j) {
        ModuleData m;
        m.free = false;
        m.J = std::move(j);
        return m;
    }
};

struct VregAnswer {
    Mem status = Mem::Unknown;
    bool certified_only = false; // one-directional (resolution input)
    std::string note;
};

// Is p in the coarse regularity of M for the weight functional w? The
// coarse irrelevant ideal is generated by the w-positive variables.
VregAnswer vreg_membership(const Ring& ring, const ModuleData& M,
                           const Coarsening& w, const Int& p);

struct Vregnum {
    bool minus_infinity = false;
    Int value = 0;
    bool upper_bound_only = false;
};

// Least p with [p, oo) inside the coarse regularity (exact for free
// modules; an upper bound for resolution input).
Vregnum vregnum(const Ring& ring, const ModuleData& M, const Coarsening& w);

struct BstarAnswer {
    Mem status = Mem::Unknown;
    bool certified_only = false;
    std::vector<std::string> failures;
};

// Does every coarsening meet its bound: vregnum_{w_k}(M) <= b_k?
BstarAnswer bstar_regular(const Ring& ring, const ModuleData& M,
                          const std::vector<Coarsening>& ws,
                          const std::vector<Int>& b);

// Shared halfplane vanishing test: does the support of H^i_B(M) stay inside
// { x : v.x < theta_i } for every i? Exact for free modules; for resolution
// input the test runs on each summand of each level.
struct HalfplaneLevel {
    size_t i = 0;
    bool ok = false;
    std::string blocker; // first failing support piece, when not ok
};

struct HalfplaneReport {
    bool applicable = true;
    std::string refusal;
    std::vector<HalfplaneLevel> levels;
    bool all = false;
    bool certified_only = false;
};

HalfplaneReport halfplane_vanishes(CohCache& coh, const ModuleData& M,
                                   const Vec& v, const std::vector<Int>& thetas);

// Degree-bound criterion for membership in the regularity region: with
// theta_i = v.m + (k - i) * step(k, i), halfplane vanishing at every i
// certifies m + NC[k-i] inside the vanishing sets; k = 1 certifies
// regularity of m itself.
HalfplaneReport halfplane_implies_reg(CohCache& coh, const ModuleData& M,
                                      const Vec& m, const Vec& v, long k);

} // namespace multireg

#endif
