#include "multireg/ring.hpp"

#include "multireg/semigroup.hpp"

#include <fstream>
#include <sstream>

namespace multireg {

Vec Ring::degree_of_expo(const Vec& e) const {
    if (e.size() != nvars())
        throw std::invalid_argument("exponent vector has wrong length");
    Vec d = vec_zero(rank);
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t t = 0; t < rank; ++t) d[t] += e[i] * var_degrees[i][t];
    return d;
}

std::string Ring::monomial_str(const Vec& e) const {
    std::string s;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += var_names[i];
        if (e[i] != 1) s += "^" + e[i].get_str();
    }
    return s.empty() ? "1" : s;
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < var_names.size(); ++i)
        if (var_names[i] == name) return (int)i;
    return -1;
}

RingSpecError::RingSpecError(std::vector<std::string> errs)
    : std::runtime_error(errs.empty() ? "ring spec error"
                                      : errs[0] + (errs.size() > 1 ? " (+more)" : "")),
      errors(std::move(errs)) {}

bool divides(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<Vec> minimalize_monomials(std::vector<Vec> gens) {
    std::vector<Vec> uniq = sorted_unique(std::move(gens));
    std::vector<Vec> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
        bool red = false;
        for (size_t j = 0; j < uniq.size() && !red; ++j)
            if (i != j && divides(uniq[j], uniq[i]) && uniq[j] != uniq[i]) red = true;
        if (!red) out.push_back(uniq[i]);
    }
    return out;
}

namespace {

struct Parser {
    std::vector<std::string> errors;
    int line = 0;

    void err(const std::string& m) {
        errors.push_back("line " + std::to_string(line) + ": " + m);
    }

    bool parse_int(const std::string& tok, Int& out) {
        try {
            out = Int(tok);
            return true;
        } catch (const std::invalid_argument&) {
            err("not an integer: '" + tok + "'");
            return false;
        }
    }

    bool parse_vec(const std::vector<std::string>& toks, size_t from, size_t rank,
                   Vec& out) {
        if (toks.size() - from != rank) {
            err("expected " + std::to_string(rank) + " integers, got " +
                std::to_string(toks.size() - from));
            return false;
        }
        out.clear();
        for (size_t i = from; i < toks.size(); ++i) {
            Int x;
            if (!parse_int(toks[i], x)) return false;
            out.push_back(x);
        }
        return true;
    }

    // name, name^k, products joined by '*'
    bool parse_monomial(const Ring& ring, const std::string& tok, Vec& e) {
        e.assign(ring.nvars(), Int(0));
        std::string piece;
        std::stringstream ss(tok);
        while (std::getline(ss, piece, '*')) {
            std::string name = piece;
            Int pow = 1;
            auto caret = piece.find('^');
            if (caret != std::string::npos) {
                name = piece.substr(0, caret);
                if (!parse_int(piece.substr(caret + 1), pow)) return false;
                if (pow < 0) {
                    err("negative exponent in '" + tok + "'");
                    return false;
                }
            }
            int idx = ring.var_index(name);
            if (idx < 0) {
                err("unknown variable '" + name + "' in '" + tok + "'");
                return false;
            }
            e[(size_t)idx] += pow;
        }
        if (vec_is_zero(e)) {
            err("unit monomial '" + tok + "' cannot generate the irrelevant ideal");
            return false;
        }
        return true;
    }
};

} // namespace

Ring load_ring(std::istream& in) {
    Ring ring;
    Parser P;
    bool have_rank = false;
    std::string raw;
    while (std::getline(in, raw)) {
        ++P.line;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::stringstream ss(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty()) continue;
        const std::string& key = toks[0];

        if (key == "rank") {
            if (have_rank) {
                P.err("duplicate rank line");
                continue;
            }
            Int r;
            if (toks.size() != 2 || !P.parse_int(toks[1], r) || r < 1) {
                P.err("rank needs one positive integer");
                continue;
            }
            ring.rank = (size_t)r.get_ui();
            have_rank = true;
            continue;
        }
        if (!have_rank) {
            P.err("'" + key + "' before the rank line");
            continue;
        }
        if (key == "var") {
            if (toks.size() < 2) {
                P.err("var needs a name and a degree vector");
                continue;
            }
            if (ring.var_index(toks[1]) >= 0) {
                P.err("duplicate variable '" + toks[1] + "'");
                continue;
            }
            Vec d;
            if (!P.parse_vec(toks, 2, ring.rank, d)) continue;
            ring.var_names.push_back(toks[1]);
            ring.var_degrees.push_back(d);
            continue;
        }
        if (key == "ideal") {
            for (size_t i = 1; i < toks.size(); ++i) {
                Vec e;
                if (P.parse_monomial(ring, toks[i], e)) ring.ideal.push_back(e);
            }
            if (toks.size() == 1) P.err("ideal line without generators");
            continue;
        }
        if (key == "ideal_exp") {
            Vec e;
            if (!P.parse_vec(toks, 1, ring.nvars(), e)) continue;
            bool neg = false;
            for (const auto& x : e)
                if (x < 0) neg = true;
            if (neg || vec_is_zero(e)) {
                P.err("ideal_exp needs a nonzero nonnegative exponent vector");
                continue;
            }
            ring.ideal.push_back(e);
            continue;
        }
        if (key == "config") {
            Vec c;
            if (P.parse_vec(toks, 1, ring.rank, c)) ring.config.push_back(c);
            continue;
        }
        if (key == "regS") {
            Vec g;
            if (P.parse_vec(toks, 1, ring.rank, g)) ring.regS_hint.push_back(g);
            continue;
        }
        if (key == "fan_cone") {
            std::vector<int> cone;
            bool ok = true;
            for (size_t i = 1; i < toks.size(); ++i) {
                int idx = ring.var_index(toks[i]);
                if (idx < 0) {
                    P.err("unknown variable '" + toks[i] + "' in fan_cone");
                    ok = false;
                    break;
                }
                cone.push_back(idx);
            }
            if (ok) ring.fan_cones.push_back(cone);
            continue;
        }
        P.err("unknown directive '" + key + "'");
    }

    // Structural validation; line numbers no longer apply, use line 0.
    P.line = 0;
    if (!have_rank) P.err("missing rank line");
    if (ring.var_names.empty()) P.err("no variables declared");
    if (ring.config.empty()) P.err("no config lines (need at least one cone generator)");

    if (!ring.var_names.empty()) {
        Pointedness grading = check_pointed(ring.var_degrees);
        if (!grading.pointed)
            P.err("grading is not positive: " + grading.describe());
        else
            ring.grading_phi = grading.phi;
    }
    if (!ring.config.empty()) {
        Pointedness cone = check_pointed(ring.config);
        if (!cone.pointed) P.err("config cone is not pointed: " + cone.describe());
    }
    if (!P.errors.empty()) throw RingSpecError(std::move(P.errors));

    ring.ideal = minimalize_monomials(std::move(ring.ideal));
    return ring;
}

Ring load_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RingSpecError({"cannot open ring spec '" + path + "'"});
    return load_ring(in);
}

Coarsening classify_coarsening(const Ring& ring, const Vec& v) {
    if (v.size() != ring.rank)
        throw std::invalid_argument("coarsening functional has wrong rank");
    Coarsening w;
    w.v = v;
    for (size_t i = 0; i < ring.nvars(); ++i) {
        Int d = vec_dot(v, ring.var_degrees[i]);
        if (d < 0)
            throw std::invalid_argument(
                "not a coarsening: variable " + ring.var_names[i] +
                " gets negative weight " + d.get_str());
        w.var_deg.push_back(d);
        if (d > 0) w.pos_vars.push_back((int)i);
    }
    if (w.pos_vars.empty())
        throw std::invalid_argument("not a coarsening: every variable gets weight zero");
    w.positive = w.pos_vars.size() == ring.nvars();
    w.c = 1;
    Int sum = 0;
    for (int i : w.pos_vars) {
        w.c = lcm(w.c, w.var_deg[(size_t)i]);
        sum += w.var_deg[(size_t)i];
    }
    Int n1 = Int((long)w.pos_vars.size());
    w.s = n1 * w.c - sum;
    if (w.s < w.c) w.s = w.c;
    return w;
}

std::vector<Vec> monomials_of_degree(const Ring& ring, const Vec& d, long cap) {
    check_rank(d, vec_zero(ring.rank));
    return fiber_solutions(ring.var_degrees, d, ring.grading_phi, cap);
}

} // namespace multireg
