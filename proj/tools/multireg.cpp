#include "cli_support.hpp"

#include "multireg/coarsen.hpp"
#include "multireg/cohomology.hpp"
#include "multireg/family.hpp"
#include "multireg/region.hpp"
#include "multireg/resolution.hpp"
#include "multireg/ring.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace multireg;
using nlohmann::json;

#ifndef MULTIREG_DATA_DIR
#define MULTIREG_DATA_DIR "data"
#endif

namespace {

std::string trim(std::string s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

// split at top level: separators inside (...) are kept
std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

Int parse_int(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw std::invalid_argument("empty integer");
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) throw std::invalid_argument("bad integer '" + s + "'");
    for (; k < t.size(); ++k)
        if (!isdigit((unsigned char)t[k]))
            throw std::invalid_argument("bad integer '" + s + "'");
    return Int(t);
}

Vec parse_vec(const std::string& s, size_t rank) {
    std::string t = trim(s);
    if (!t.empty() && t.front() == '(' && t.back() == ')')
        t = t.substr(1, t.size() - 2);
    Vec v;
    for (const std::string& part : split_top(t, ','))
        v.push_back(parse_int(part));
    if (v.size() != rank)
        throw std::invalid_argument("degree '" + s + "' has " +
                                    std::to_string(v.size()) +
                                    " coordinates, expected " +
                                    std::to_string(rank));
    return v;
}

std::vector<Vec> parse_vec_list(const std::string& s, size_t rank) {
    std::vector<Vec> out;
    for (const std::string& part : split_top(s, ';'))
        if (!part.empty()) out.push_back(parse_vec(part, rank));
    return out;
}

std::pair<Vec, Vec> parse_window(const std::string& s, size_t rank) {
    size_t pos = s.find("..");
    if (pos == std::string::npos)
        throw std::invalid_argument("window '" + s + "' needs the form lo..hi");
    std::string a = trim(s.substr(0, pos)), b = trim(s.substr(pos + 2));
    auto side = [&](const std::string& t) {
        if (t.find(',') != std::string::npos || t.find('(') != std::string::npos)
            return parse_vec(t, rank);
        return Vec(rank, parse_int(t));
    };
    Vec lo = side(a), hi = side(b);
    for (size_t i = 0; i < rank; ++i)
        if (lo[i] > hi[i])
            throw std::invalid_argument("window '" + s + "' is empty");
    return {lo, hi};
}

// levels: "0:(0,0);1:(1,1),(1,1)" (braces optional, levels may repeat)
TypeJ parse_type_J(std::string s, size_t rank) {
    std::string t;
    for (char ch : s)
        if (ch != '{' && ch != '}') t += ch;
    TypeJ J;
    for (const std::string& lvl : split_top(t, ';')) {
        if (lvl.empty()) continue;
        size_t pos = lvl.find(':');
        if (pos == std::string::npos)
            throw std::invalid_argument("level '" + lvl + "' needs the form p:shifts");
        long p = (long)parse_int(lvl.substr(0, pos)).get_si();
        if (p < 0 || p > 32)
            throw std::invalid_argument("level index out of range");
        if ((size_t)p >= J.levels.size()) J.levels.resize((size_t)p + 1);
        for (const std::string& part : split_top(lvl.substr(pos + 1), ','))
            if (!part.empty())
                J.levels[(size_t)p].push_back(parse_vec(part, rank));
    }
    if (J.levels.empty() || J.levels[0].empty())
        throw std::invalid_argument("twist data needs at least one level-0 shift");
    return J;
}

std::vector<Vec> parse_monomials(const std::string& s, const Ring& ring) {
    std::vector<Vec> out;
    std::string norm = s;
    for (char& ch : norm)
        if (ch == ' ' || ch == '\t') ch = ',';
    for (const std::string& tok : split_top(norm, ',')) {
        if (tok.empty()) continue;
        Vec e(ring.nvars(), Int(0));
        std::stringstream ss(tok);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            factor = trim(factor);
            if (factor.empty()) continue;
            size_t caret = factor.find('^');
            std::string name = trim(factor.substr(0, caret));
            Int exp = 1;
            if (caret != std::string::npos)
                exp = parse_int(factor.substr(caret + 1));
            int idx = ring.var_index(name);
            if (idx < 0)
                throw std::invalid_argument("unknown variable '" + name + "'");
            if (exp < 0) throw std::invalid_argument("negative exponent");
            e[(size_t)idx] += exp;
        }
        if (vec_is_zero(e))
            throw std::invalid_argument("monomial '" + tok + "' is a unit");
        out.push_back(std::move(e));
    }
    if (out.empty()) throw std::invalid_argument("empty monomial list");
    return out;
}

std::vector<Int> parse_int_list(const std::string& s) {
    std::vector<Int> out;
    for (const std::string& part : split_top(s, ','))
        if (!part.empty()) out.push_back(parse_int(part));
    return out;
}

std::string mem_str(Mem m) {
    switch (m) {
    case Mem::Yes: return "yes";
    case Mem::No: return "no";
    default: return "unknown";
    }
}

json int_json(const Int& x) {
    if (x.fits_slong_p()) return json((long)x.get_si());
    return json(x.get_str());
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

json vecs_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(vec_json(v));
    return a;
}

json region_json(const Region& R) {
    json j;
    j["generators"] = vecs_json(R.gens);
    j["exact"] = R.exact;
    if (!R.note.empty()) j["note"] = R.note;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Output {
    bool as_json = false;
    json j;
    std::ostringstream text;

    void put(const std::string& key, const json& val, const std::string& line) {
        j[key] = val;
        text << line << "\n";
    }
    void line(const std::string& s) { text << s << "\n"; }
    void flush() {
        if (as_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text.str();
    }
};

std::string resolve_path(const std::string& data_dir, const std::string& arg) {
    if (std::filesystem::exists(arg)) return arg;
    std::string alt = data_dir + "/" + arg;
    if (std::filesystem::exists(alt)) return alt;
    throw std::invalid_argument("no such ring file: " + arg);
}

Region base_regS(const Ring& ring, CohCache& coh, const Vec& lo, const Vec& hi,
                 std::string* how) {
    if (!ring.regS_hint.empty()) {
        Region r = make_region(ring.config, ring.regS_hint);
        r.exact = true;
        if (how) *how = "from the ring file";
        return r;
    }
    if (how) *how = "computed in the window";
    return regS_region(coh, lo, hi);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact regularity regions for multigraded rings"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    std::string data_dir = MULTIREG_DATA_DIR;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--data", data_dir, "data directory")->envname("MULTIREG_DATA");

    // coh
    auto* cmd_coh = app.add_subcommand("coh", "local cohomology of a free module in one degree");
    std::string coh_ring, coh_d, coh_shifts;
    long coh_i = 0, coh_oracle = 0;
    cmd_coh->add_option("ring", coh_ring)->required();
    cmd_coh->add_option("--i", coh_i, "cohomological index")->required();
    cmd_coh->add_option("--d", coh_d, "degree, e.g. (0,1)")->required();
    cmd_coh->add_option("--shifts", coh_shifts, "summand twists, ';'-separated (default: the ring)");
    cmd_coh->add_option("--oracle", coh_oracle, "also run the truncation witness with this box radius");

    // regS
    auto* cmd_regS = app.add_subcommand("regS", "regularity region of the ring");
    std::string regS_ring, regS_window = "-6..6", regS_member;
    cmd_regS->add_option("ring", regS_ring)->required();
    cmd_regS->add_option("--window", regS_window, "search window lo..hi");
    cmd_regS->add_option("--member", regS_member, "test one degree instead");

    // regJ
    auto* cmd_regJ = app.add_subcommand("regJ", "regularity region from the twist data of a resolution");
    std::string regJ_ring, regJ_J, regJ_window = "-6..6";
    long regJ_level = -1;
    cmd_regJ->add_option("ring", regJ_ring)->required();
    cmd_regJ->add_option("--J", regJ_J, "twist data, e.g. \"0:(0,0);1:(1,1),(1,1)\"")->required();
    cmd_regJ->add_option("--window", regJ_window, "window for the ring region when the file has no hint");
    cmd_regJ->add_option("--at-level", regJ_level, "single cohomological index instead of the full region");

    // dreg
    auto* cmd_dreg = app.add_subcommand("dreg", "degree sets of a region");
    std::string dreg_ring, dreg_D, dreg_window = "-6..6", dreg_member_s;
    long dreg_p = 0;
    cmd_dreg->add_option("ring", dreg_ring)->required();
    cmd_dreg->add_option("--D", dreg_D, "region generators, ';'-separated")->required();
    cmd_dreg->add_option("--p", dreg_p, "homological level");
    cmd_dreg->add_option("--window", dreg_window, "enumeration window lo..hi");
    cmd_dreg->add_option("--member", dreg_member_s, "test one degree instead");

    // resolve
    auto* cmd_res = app.add_subcommand("resolve", "free resolution of a monomial ideal");
    std::string res_ring, res_gens;
    bool res_raw = false;
    cmd_res->add_option("ring", res_ring)->required();
    cmd_res->add_option("--gens", res_gens, "monomial generators (default: the irrelevant ideal)");
    cmd_res->add_flag("--raw", res_raw, "keep the full simplicial complex instead of minimalizing");

    // coarse
    auto* cmd_coarse = app.add_subcommand("coarse", "coarse regularity along a weight functional");
    std::string coarse_ring, coarse_v, coarse_shifts, coarse_res_gens, coarse_m;
    long coarse_p = 0, coarse_k = 1;
    cmd_coarse->add_option("ring", coarse_ring)->required();
    cmd_coarse->add_option("--v", coarse_v, "weight functional")->required();
    cmd_coarse->add_option("--shifts", coarse_shifts, "free module twists, ';'-separated");
    cmd_coarse->add_option("--res-gens", coarse_res_gens, "monomial ideal; use its resolution twists as input");
    cmd_coarse->add_option("--p", coarse_p, "test a single coarse degree");
    cmd_coarse->add_option("--implies-reg", coarse_m, "run the halfplane criterion at this degree");
    cmd_coarse->add_option("--k", coarse_k, "cone shift for the halfplane criterion");

    // family
    auto* cmd_family = app.add_subcommand("family", "primitive collections and family regularity");
    std::string fam_ring, fam_m, fam_b, fam_res_gens;
    bool fam_vres = false;
    cmd_family->add_option("ring", fam_ring)->required();
    cmd_family->add_option("--m", fam_m, "degree to test");
    cmd_family->add_flag("--vres", fam_vres, "run the full resolution pipeline (needs --m, --b, --res-gens)");
    cmd_family->add_option("--b", fam_b, "bounds per subfamily, ','-separated, mask order");
    cmd_family->add_option("--res-gens", fam_res_gens, "monomial ideal to resolve");

    // examples
    auto* cmd_ex = app.add_subcommand("examples", "run the documented scenarios and diff against the stored output");
    bool ex_update = false;
    cmd_ex->add_flag("--update", ex_update, "rewrite the stored outputs");

    // selftest
    auto* cmd_self = app.add_subcommand("selftest", "run the cross-module invariant battery");

    for (CLI::App* s : app.get_subcommands([](const CLI::App*) { return true; }))
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    Output out;
    out.as_json = (format == "json");
    int rc = 0;

    try {
        if (*cmd_coh) {
            Ring ring = load_ring_file(resolve_path(data_dir, coh_ring));
            CohCache coh(ring);
            Vec d = parse_vec(coh_d, ring.rank);
            std::vector<Vec> shifts = {vec_zero(ring.rank)};
            if (!coh_shifts.empty()) shifts = parse_vec_list(coh_shifts, ring.rank);
            if (coh_i < 0) throw std::invalid_argument("--i must be nonnegative");
            PieceDim p = coh_free_piece(coh, shifts, (size_t)coh_i, d);
            out.j["i"] = coh_i;
            out.j["d"] = vec_json(d);
            out.j["finite"] = p.finite;
            if (p.finite) out.j["dim"] = int_json(p.dim);
            out.line("h^" + std::to_string(coh_i) + " at " + vec_str(d) + ": " +
                     (p.finite ? p.dim.get_str() : std::string("infinite")));
            if (cmd_coh->count("--oracle")) {
                OracleDim o = cech_oracle_piece(ring, shifts, d, coh_oracle);
                Int h = ((size_t)coh_i < o.h.size()) ? o.h[(size_t)coh_i] : Int(0);
                out.j["oracle"] = {{"W", coh_oracle},
                                   {"h", int_json(h)},
                                   {"conclusive", o.conclusive}};
                out.line("truncation witness (W=" + std::to_string(coh_oracle) +
                         "): h^" + std::to_string(coh_i) + " = " + h.get_str() +
                         (o.conclusive ? " [conclusive]" : " [boundary cells, not conclusive]"));
            }
        } else if (*cmd_regS) {
            Ring ring = load_ring_file(resolve_path(data_dir, regS_ring));
            CohCache coh(ring);
            if (!regS_member.empty()) {
                Vec m = parse_vec(regS_member, ring.rank);
                RegAnswer a = regS_membership(coh, m);
                out.j["member"] = vec_json(m);
                out.j["status"] = mem_str(a.status);
                if (!a.detail.empty()) out.j["detail"] = a.detail;
                out.line("member " + vec_str(m) + ": " + mem_str(a.status));
                if (!a.detail.empty()) out.line("detail: " + a.detail);
                if (a.status == Mem::Unknown) rc = 2;
            } else {
                auto [lo, hi] = parse_window(regS_window, ring.rank);
                Region r = regS_region(coh, lo, hi);
                out.j["region"] = region_json(r);
                out.line("regularity region of the ring");
                out.line(multireg_cli::region_line(r));
                if (!r.exact) rc = 2;
            }
        } else if (*cmd_regJ) {
            Ring ring = load_ring_file(resolve_path(data_dir, regJ_ring));
            CohCache coh(ring);
            TypeJ J = parse_type_J(regJ_J, ring.rank);
            auto [lo, hi] = parse_window(regJ_window, ring.rank);
            std::string how;
            Region regS = base_regS(ring, coh, lo, hi, &how);
            out.line("ring region " + how + ": " + multireg_cli::region_line(regS));
            out.j["ring_region"] = region_json(regS);
            Region r = (regJ_level >= 0)
                           ? reg_of_J_level(J, regS, ring.config, regJ_level)
                           : reg_of_J(J, regS, ring.config);
            out.j["region"] = region_json(r);
            if (regJ_level >= 0)
                out.line("region at index " + std::to_string(regJ_level));
            else
                out.line("regularity region from the twist data (" +
                         std::to_string(J.levels.size()) + " levels)");
            out.line(multireg_cli::region_line(r));
            if (!r.exact || !regS.exact) rc = 2;
        } else if (*cmd_dreg) {
            Ring ring = load_ring_file(resolve_path(data_dir, dreg_ring));
            CohCache coh(ring);
            if (dreg_p < 0) throw std::invalid_argument("--p must be nonnegative");
            std::vector<Vec> gens = parse_vec_list(dreg_D, ring.rank);
            if (gens.empty()) throw std::invalid_argument("--D needs at least one generator");
            Region D = make_region(ring.config, gens);
            auto [lo, hi] = parse_window(dreg_window, ring.rank);
            std::string how;
            Region regS = base_regS(ring, coh, lo, hi, &how);
            out.line("ring region " + how + ": " + multireg_cli::region_line(regS));
            out.j["ring_region"] = region_json(regS);
            if (!regS.exact) rc = 2;
            if (!dreg_member_s.empty()) {
                Vec d = parse_vec(dreg_member_s, ring.rank);
                bool yes = dreg_member(D, regS, dreg_p, d);
                out.j["member"] = vec_json(d);
                out.j["level"] = dreg_p;
                out.j["status"] = yes ? "yes" : "no";
                out.line("degree set at level " + std::to_string(dreg_p) +
                         " contains " + vec_str(d) + ": " + (yes ? "yes" : "no"));
            } else {
                auto pts = dreg_in_box(D, regS, dreg_p, lo, hi);
                auto mx = maximal_in_cone_order(pts, ring.config);
                out.j["level"] = dreg_p;
                out.j["count_in_window"] = (long)pts.size();
                out.j["maximal"] = vecs_json(mx);
                out.line("degree set at level " + std::to_string(dreg_p) +
                         " in window: " + std::to_string(pts.size()) + " points");
                out.line("maximal elements: " + (mx.empty() ? "(none)" : vecs_str(mx)));
            }
        } else if (*cmd_res) {
            Ring ring = load_ring_file(resolve_path(data_dir, res_ring));
            std::vector<Vec> gens =
                res_gens.empty() ? ring.ideal : parse_monomials(res_gens, ring);
            GradedComplex F = taylor_complex(ring, gens);
            if (!res_raw) F = minimalize_complex(F);
            auto problems = validate_complex(ring, F);
            out.line(std::string("complex: ") +
                     (res_raw ? "simplicial (raw)" : "minimalized"));
            out.j["minimal"] = !res_raw;
            json levels = json::array();
            for (size_t p = 0; p < F.length(); ++p) {
                std::ostringstream ln;
                ln << "level " << p << ": ";
                if (F.shifts[p].empty()) ln << "0";
                for (size_t a = 0; a < F.shifts[p].size(); ++a)
                    ln << (a ? " " : "") << vec_str(F.shifts[p][a]);
                out.line(ln.str());
                levels.push_back(vecs_json(F.shifts[p]));
            }
            out.j["levels"] = levels;
            out.j["valid"] = problems.empty();
            out.line(std::string("valid: ") + (problems.empty() ? "yes" : "NO"));
            if (!problems.empty()) {
                for (const auto& pr : problems) out.line("  " + pr);
                out.j["problems"] = problems;
                rc = 1;
            }
        } else if (*cmd_coarse) {
            Ring ring = load_ring_file(resolve_path(data_dir, coarse_ring));
            Vec v = parse_vec(coarse_v, ring.rank);
            Coarsening w = classify_coarsening(ring, v);
            ModuleData M = ModuleData::free_module({vec_zero(ring.rank)});
            if (!coarse_res_gens.empty()) {
                GradedComplex F = minimalize_complex(
                    taylor_complex(ring, parse_monomials(coarse_res_gens, ring)));
                M = ModuleData::from_type_J(extract_type_J(F));
            } else if (!coarse_shifts.empty()) {
                M = ModuleData::free_module(parse_vec_list(coarse_shifts, ring.rank));
            }
            std::ostringstream head;
            head << "functional v = " << vec_str(v) << ": c = " << w.c.get_str()
                 << ", s = " << w.s.get_str() << ", positive variables:";
            for (int k : w.pos_vars) head << " " << ring.var_names[(size_t)k];
            out.line(head.str());
            out.j["c"] = int_json(w.c);
            out.j["s"] = int_json(w.s);
            out.j["module"] = M.free ? "free" : "resolution twists";
            if (cmd_coarse->count("--p")) {
                VregAnswer a = vreg_membership(ring, M, w, Int(coarse_p));
                out.j["p"] = coarse_p;
                out.j["status"] = mem_str(a.status);
                out.j["certified_only"] = a.certified_only;
                out.line("regular at p = " + std::to_string(coarse_p) + ": " +
                         mem_str(a.status) +
                         (a.certified_only ? " [certificate only]" : ""));
                if (!a.note.empty()) out.line("note: " + a.note);
                if (a.status == Mem::Unknown) rc = 2;
            } else {
                Vregnum n = vregnum(ring, M, w);
                if (n.minus_infinity) {
                    out.j["vregnum"] = "-infinity";
                    out.line("coarse regularity number: -infinity (no positive variables act)");
                } else {
                    out.j["vregnum"] = int_json(n.value);
                    out.j["upper_bound_only"] = n.upper_bound_only;
                    out.line("coarse regularity number: " + n.value.get_str() +
                             (n.upper_bound_only ? " [upper bound]" : " [exact]"));
                    if (n.upper_bound_only) rc = 2;
                }
            }
            if (!coarse_m.empty()) {
                CohCache coh(ring);
                Vec m = parse_vec(coarse_m, ring.rank);
                HalfplaneReport rep = halfplane_implies_reg(coh, M, m, v, coarse_k);
                out.line("halfplane criterion at m = " + vec_str(m) +
                         ", k = " + std::to_string(coarse_k));
                json jl = json::array();
                if (!rep.applicable) {
                    out.line("refused: " + rep.refusal);
                    out.j["halfplane"] = {{"applicable", false}, {"refusal", rep.refusal}};
                    rc = 2;
                } else {
                    for (const auto& lv : rep.levels) {
                        out.line("  index " + std::to_string(lv.i) + ": " +
                                 (lv.ok ? "ok" : ("blocked by " + lv.blocker)));
                        jl.push_back({{"i", lv.i}, {"ok", lv.ok}, {"blocker", lv.blocker}});
                    }
                    out.line(std::string("implies membership: ") +
                             (rep.all ? "yes" : "not certified") +
                             (rep.certified_only && rep.all ? " [certificate only]" : ""));
                    out.j["halfplane"] = {{"applicable", true},
                                          {"levels", jl},
                                          {"all", rep.all},
                                          {"certified_only", rep.certified_only}};
                    if (!rep.all) rc = 2;
                }
            }
        } else if (*cmd_family) {
            Ring ring = load_ring_file(resolve_path(data_dir, fam_ring));
            IdealFamily fam = primitive_collections(ring);
            FamilyContext ctx(ring, fam);
            out.line("primitive collections (" + std::to_string(fam.collections.size()) + "):");
            json jc = json::array();
            for (size_t i = 0; i < fam.collections.size(); ++i) {
                std::ostringstream ln;
                ln << "  P" << (i + 1) << " = {";
                for (size_t k = 0; k < fam.collections[i].size(); ++k)
                    ln << (k ? ", " : "")
                       << ring.var_names[(size_t)fam.collections[i][k]];
                ln << "}";
                if (fam.v[i])
                    ln << "  v" << (i + 1) << " = " << vec_str(*fam.v[i]);
                out.line(ln.str());
                json one;
                one["vars"] = fam.collections[i];
                if (fam.v[i]) one["v"] = vec_json(*fam.v[i]);
                jc.push_back(one);
            }
            out.j["collections"] = jc;
            out.j["orthogonal"] = fam.orthogonal;
            out.line(std::string("orthogonal functionals: ") +
                     (fam.orthogonal ? "yes" : ("no (" + fam.no_orthogonal_reason + ")")));
            ModuleData M = ModuleData::free_module({vec_zero(ring.rank)});
            GradedComplex F;
            bool have_F = false;
            if (!fam_res_gens.empty()) {
                F = minimalize_complex(
                    taylor_complex(ring, parse_monomials(fam_res_gens, ring)));
                M = ModuleData::from_type_J(extract_type_J(F));
                have_F = true;
                out.line("module: twists of the minimal resolution of (" + fam_res_gens + ")");
            }
            if (fam_vres) {
                if (fam_m.empty() || fam_b.empty() || !have_F)
                    throw std::invalid_argument("--vres needs --m, --b and --res-gens");
                Vec m = parse_vec(fam_m, ring.rank);
                std::vector<Int> b = parse_int_list(fam_b);
                VresReport rep = vres_pipeline(ctx, F, m, b);
                if (!rep.applicable) {
                    out.line("refused: " + rep.refusal);
                    out.j["vres"] = {{"applicable", false}, {"refusal", rep.refusal}};
                    rc = 2;
                } else {
                    for (const auto& n : rep.notes) out.line("note: " + n);
                    for (const auto& f : rep.failures) out.line("failure: " + f);
                    out.line("coarse certificate at " + vec_str(m) + ": " +
                             mem_str(rep.regv.status) +
                             (rep.regv.certified_only ? " [certificate only]" : ""));
                    if (!rep.regv.detail.empty()) out.line("  " + rep.regv.detail);
                    for (size_t p = 0; p < rep.level_sets.size(); ++p) {
                        std::ostringstream ln;
                        ln << "level set p = " << p << ":";
                        for (const auto& hs : rep.level_sets[p])
                            ln << " { " << vec_str(hs.normal)
                               << " . d >= " << hs.rhs.get_str() << " }";
                        out.line(ln.str());
                    }
                    out.line("resolution degrees inside the level sets: " +
                             std::string(rep.bounds_ok ? "yes" : "NO"));
                    for (const auto& vi : rep.violations)
                        out.line("  level " + std::to_string(vi.level) + " twist " +
                                 vec_str(vi.shift) + ": " + vi.lhs.get_str() +
                                 " > " + vi.rhs.get_str());
                    out.line(std::string("pipeline: ") + (rep.pass ? "pass" : "FAIL"));
                    json jv;
                    jv["applicable"] = true;
                    jv["notes"] = rep.notes;
                    jv["failures"] = rep.failures;
                    jv["regv"] = mem_str(rep.regv.status);
                    jv["bounds_ok"] = rep.bounds_ok;
                    jv["pass"] = rep.pass;
                    jv["upper_bound_mode"] = rep.upper_bound_mode;
                    out.j["vres"] = jv;
                    if (!rep.pass)
                        rc = (rep.regv.status == Mem::Unknown || rep.upper_bound_mode) ? 2 : 0;
                }
            } else if (!fam_m.empty()) {
                Vec m = parse_vec(fam_m, ring.rank);
                FamilyAnswer star = regstar_membership(ctx, M, m);
                FamilyAnswer bv = regBv_membership(ctx, M, m);
                out.j["m"] = vec_json(m);
                out.j["family_regularity"] = mem_str(star.status);
                out.j["coarse_certificate"] = mem_str(bv.status);
                out.line("family regularity at " + vec_str(m) + ": " +
                         mem_str(star.status) +
                         (star.certified_only && star.status == Mem::Yes
                              ? " [certificate only]" : ""));
                if (!star.detail.empty()) out.line("  " + star.detail);
                out.line("coarse certificate at " + vec_str(m) + ": " +
                         mem_str(bv.status) +
                         (bv.certified_only && bv.status == Mem::Yes
                              ? " [certificate only]" : ""));
                if (!bv.detail.empty()) out.line("  " + bv.detail);
                if (star.status == Mem::Unknown || bv.status == Mem::Unknown) rc = 2;
            }
        } else if (*cmd_ex) {
            struct Scenario {
                const char* name;
                std::string (*fn)(const std::string&);
            };
            const Scenario scenarios[] = {
                {"classical", multireg_cli::scenario_classical},
                {"weighted", multireg_cli::scenario_weighted},
                {"products", multireg_cli::scenario_products},
                {"hirzebruch", multireg_cli::scenario_hirzebruch},
            };
            json js = json::array();
            for (const Scenario& sc : scenarios) {
                std::string got = sc.fn(data_dir);
                std::string path = data_dir + "/expected/" + sc.name + ".txt";
                if (ex_update) {
                    std::ofstream f(path, std::ios::binary);
                    f << got;
                    out.line(std::string("scenario ") + sc.name + ": updated");
                    js.push_back({{"name", sc.name}, {"updated", true}});
                    continue;
                }
                std::string want;
                bool missing = false;
                try {
                    want = read_file(path);
                } catch (const std::exception&) {
                    missing = true;
                }
                bool ok = !missing && want == got;
                js.push_back({{"name", sc.name}, {"ok", ok}});
                if (ok) {
                    out.line(std::string("scenario ") + sc.name + ": ok");
                } else {
                    rc = 1;
                    out.line(std::string("scenario ") + sc.name + ": MISMATCH" +
                             (missing ? " (no stored output)" : ""));
                    if (!missing) {
                        std::istringstream a(want), b(got);
                        std::string la, lb;
                        int n = 1;
                        while (true) {
                            bool ga = (bool)std::getline(a, la);
                            bool gb = (bool)std::getline(b, lb);
                            if (!ga && !gb) break;
                            if (!ga) la = "<end>";
                            if (!gb) lb = "<end>";
                            if (la != lb) {
                                out.line("  line " + std::to_string(n) + ":");
                                out.line("    stored: " + la);
                                out.line("    got:    " + lb);
                                break;
                            }
                            ++n;
                        }
                    }
                }
            }
            out.j["scenarios"] = js;
        } else if (*cmd_self) {
            auto checks = multireg_cli::run_selftest(data_dir);
            json js = json::array();
            size_t passed = 0;
            for (const auto& c : checks) {
                js.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
                if (c.pass) {
                    ++passed;
                    out.line("ok   " + c.name);
                } else {
                    out.line("FAIL " + c.name + ": " + c.detail);
                }
            }
            out.line("passed " + std::to_string(passed) + "/" +
                     std::to_string(checks.size()));
            out.j["checks"] = js;
            out.j["passed"] = passed;
            out.j["total"] = checks.size();
            if (passed != checks.size()) rc = 1;
        }
    } catch (const CapExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return 2;
    } catch (const RingSpecError& e) {
        std::cerr << "ring file error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    out.j["exit"] = rc;
    out.flush();
    return rc;
}
