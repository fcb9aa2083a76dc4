#ifndef MULTIREG_VEC_HPP
#define MULTIREG_VEC_HPP

#include <gmpxx.h>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace multireg {

using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Int>;   // a lattice point / degree vector
using QVec = std::vector<Rat>;

inline void check_rank(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vector rank mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    check_rank(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    check_rank(a, b);
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = -a[i];
    return r;
}

inline Vec vec_scale(const Int& k, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = k * a[i];
    return r;
}

inline Int vec_dot(const Vec& a, const Vec& b) {
    check_rank(a, b);
    Int s = 0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

inline bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

inline Vec vec_zero(size_t r) { return Vec(r, 0); }

// Lexicographic order; used everywhere a deterministic ordering is needed.
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (size_t i = 0; i < a.size(); i++) {
            int c = cmp(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

using VecSet = std::set<Vec, VecLess>;
template <class T> using VecMap = std::map<Vec, T, VecLess>;

inline std::string vec_str(const Vec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); i++) {
        if (i) s += ",";
        s += a[i].get_str();
    }
    s += ")";
    return s;
}

inline std::string vecs_str(const std::vector<Vec>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); i++) {
        if (i) s += " ";
        s += vec_str(vs[i]);
    }
    return s;
}

inline std::vector<Vec> sorted_unique(std::vector<Vec> vs) {
    VecSet set(vs.begin(), vs.end());
    return std::vector<Vec>(set.begin(), set.end());
}

// Environment-tunable enumeration caps. Overruns surface as explicit
// "unknown"/refusal statuses, never as silently truncated answers.
inline long cap_from_env(const char* name, long dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || parsed <= 0) return dflt;
    return parsed;
}

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace multireg

#endif
