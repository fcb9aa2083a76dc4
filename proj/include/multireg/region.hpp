#ifndef MULTIREG_REGION_HPP
#define MULTIREG_REGION_HPP

#include "multireg/vec.hpp"

namespace multireg {

// A region is a finitely generated module over the semigroup NC:
// union of gens[k] + NC. Empty gens list = empty region. `exact` records
// whether the generator list is certified complete; when false, `note`
// says which cap or window limited it.
struct Region {
    std::vector<Vec> base; // C
    std::vector<Vec> gens;
    bool exact = true;
    std::string note;

    bool empty() const { return gens.empty(); }
};

// Twist data of a free complex: levels[p] lists the degree shifts at
// homological position p.
struct TypeJ {
    std::vector<std::vector<Vec>> levels;
};

// Deduplicate and drop non-minimal generators (g is redundant when some
// other generator g' has g - g' in NC).
Region make_region(std::vector<Vec> base, std::vector<Vec> gens);

// Generators of the shifted cone NC[j]: all sums of |j| generators of C,
// with sign flipped when j < 0; NC[0] = NC itself (generator 0).
std::vector<Vec> shifted_cone_gens(const std::vector<Vec>& C, long j);
Region shifted_cone(const std::vector<Vec>& C, long j);

Region region_translate(Region R, const Vec& d);
Region region_union(const Region& A, const Region& B);
Region region_sum(const Region& A, const Region& B); // Minkowski sum
Region region_intersect(const Region& A, const Region& B);

bool region_member(const Region& R, const Vec& d);
bool region_subset(const Region& inner, const Region& outer);

// Regularity region determined by twist data J over a base regularity
// region for the ring: intersection of the level-0 translates of regS with
// the higher-level translates shifted by cone generators.
Region reg_of_J(const TypeJ& J, const Region& regS, const std::vector<Vec>& C);

// Same but for cohomological index i: degrees m with m + NC[1-i] inside
// every (d + regS + NC[1-i-p]) for d in J_p.
Region reg_of_J_level(const TypeJ& J, const Region& regS,
                      const std::vector<Vec>& C, long i);

// Truncation queries: is D (as a region) inside the degree-d truncation
// window at homological level p?
struct DregQuery {
    std::vector<Vec> dgens;
    Region shift0; // regS + NC[-p]
    Region shift1; // regS + NC[1-p]
    std::vector<Vec> C;
    bool member(const Vec& d) const;
};

DregQuery make_dreg_query(const Region& D, const Region& regS, long p);
bool dreg_member(const Region& D, const Region& regS, long p, const Vec& d);
std::vector<Vec> dreg_in_box(const Region& D, const Region& regS, long p,
                             const Vec& lo, const Vec& hi);

// Maximal elements of a finite point set in the NC preorder (x below y when
// y - x lies in NC).
std::vector<Vec> maximal_in_cone_order(const std::vector<Vec>& pts,
                                       const std::vector<Vec>& C);

// All lattice points of the box [lo, hi] in deterministic order.
std::vector<Vec> box_points(const Vec& lo, const Vec& hi);

} // namespace multireg

#endif
