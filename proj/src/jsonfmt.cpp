#include "bsdlab/jsonfmt.hpp"

#include <cstdio>

namespace bsdlab {

std::string fmt_real(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.11e", x);
    return buf;
}

Json json_of(const VarietyInvariants& v) {
    Json j;
    j["g"] = v.g;
    j["d"] = v.d;
    j["disc"] = v.disc.str();
    j["cond"] = v.cond.str();
    j["faltings"] = fmt_real(v.faltings);
    j["rank"] = v.rank;
    j["eps"] = fmt_real(v.eps);
    return j;
}

Json json_of(const ConstantsConfig& c) {
    Json j;
    j["masser_c"] = fmt_real(c.masser_c);
    j["matrix_c"] = c.matrix_c ? Json(fmt_real(*c.matrix_c)) : Json("auto");
    j["c_tors"] = fmt_real(c.c_tors);
    j["gamma1"] = fmt_real(c.gamma1);
    j["gamma2"] = fmt_real(c.gamma2);
    j["gamma3"] = fmt_real(c.gamma3);
    j["szpiro_c_eps_d"] = fmt_real(c.szpiro_c_eps_d);
    return j;
}

Json json_of(const LogMagnitude& m) {
    Json j;
    j["ln"] = fmt_real(m.ln);
    j["log10"] = fmt_real(m.log10());
    return j;
}

Json json_of(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    j["ln_bound"] = fmt_real(r.ln_bound.ln);
    j["log10_bound"] = fmt_real(r.ln_bound.log10());
    j["inputs"] = json_of(r.inputs);
    j["constants"] = json_of(r.constants);
    Json a = Json::array();
    for (auto s : r.assumptions) a.push_back(to_string(s));
    j["assumptions"] = a;
    return j;
}

Json json_of(const LeadingCoefficient& lc) {
    Json j;
    j["order"] = lc.analytic_order;
    j["value"] = fmt_real(lc.value);
    j["root_number"] = lc.root_number;
    j["n_max"] = lc.n_max;
    j["truncation_error"] = fmt_real(lc.truncation_error);
    return j;
}

Json json_of(const BsdTerms& t) {
    Json j;
    j["label"] = t.label;
    j["l_star"] = fmt_real(t.l_star);
    j["analytic_order"] = t.analytic_order;
    j["external_l_star"] = t.external_l_star;
    j["omega_c_infty"] = fmt_real(t.omega_c_infty);
    j["tamagawa_product"] = t.tamagawa_product.str();
    j["torsion_order"] = t.torsion_order;
    j["torsion_dual_order"] = t.torsion_dual_order;
    j["regulator"] = fmt_real(t.regulator);
    j["disc_factor"] = fmt_real(t.disc_factor);
    j["sha_predicted"] = fmt_real(t.sha_predicted);
    j["sha_nearest_integer_gap"] = fmt_real(t.sha_nearest_integer_gap);
    j["sha_nearest_is_square"] = t.sha_nearest_is_square;
    j["conductor"] = t.conductor.str();
    j["faltings"] = fmt_real(t.faltings);
    Json gh = Json::array();
    for (double h : t.generator_heights) gh.push_back(fmt_real(h));
    j["generator_heights"] = gh;
    j["warnings"] = t.warnings;
    return j;
}

Json json_of(const VerificationReport& r) {
    Json j;
    j["label"] = r.label;
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["hard"] = c.hard;
        cj["lhs_ln"] = fmt_real(c.lhs);
        cj["rhs_ln"] = fmt_real(c.rhs);
        if (!c.note.empty()) cj["note"] = c.note;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["implied_masser_c"] = fmt_real(r.implied_masser_c);
    j["implied_c_tors"] = fmt_real(r.implied_c_tors);
    j["all_hard_pass"] = r.all_hard_pass;
    return j;
}

Json json_of(const MWBasis& b) {
    Json j;
    Json pts = Json::array();
    for (const auto& p : b.points) pts.push_back(to_string(p));
    j["points"] = pts;
    Json g = Json::array();
    for (const auto& row : b.gram) {
        Json rj = Json::array();
        for (double x : row) rj.push_back(fmt_real(x));
        g.push_back(rj);
    }
    j["gram"] = g;
    j["regulator"] = fmt_real(b.regulator);
    Json hs = Json::array();
    for (double h : b.heights_sorted) hs.push_back(fmt_real(h));
    j["heights_sorted"] = hs;
    return j;
}

Json json_of(const SearchCertificate& c) {
    Json j;
    j["cutoff_canonical"] = fmt_real(c.cutoff_canonical);
    j["cutoff_naive"] = fmt_real(c.cutoff_naive);
    j["points_scanned"] = c.points_scanned;
    j["square_tests"] = c.square_tests;
    j["minkowski_lhs"] = fmt_real(c.minkowski_lhs);
    j["minkowski_rhs"] = fmt_real(c.minkowski_rhs);
    j["minkowski_ok"] = c.minkowski_ok;
    j["cutoff_bound"] = json_of(c.cutoff_bound);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

double real_field(const Json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_string()) return std::stod(v.get<std::string>());
    return v.get<double>();
}

Int int_field(const Json& j, const char* key, Int fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (v.is_string()) return Int(v.get<std::string>());
    return Int(v.get<long long>());
}

}  // namespace

VarietyInvariants invariants_from_json(const Json& j) {
    VarietyInvariants v;
    v.g = int(int_field(j, "g", 1));
    v.d = int(int_field(j, "d", 1));
    v.disc = int_field(j, "disc", 1);
    v.cond = int_field(j, "cond", 1);
    v.faltings = real_field(j, "faltings", 0.0);
    v.rank = int(int_field(j, "rank", 0));
    v.eps = real_field(j, "eps", 0.01);
    v.check();
    return v;
}

ConstantsConfig constants_from_json(const Json& j) {
    ConstantsConfig c;
    c.masser_c = real_field(j, "masser_c", 1.0);
    if (j.contains("matrix_c") && !(j.at("matrix_c").is_string() &&
                                    j.at("matrix_c").get<std::string>() == "auto"))
        c.matrix_c = real_field(j, "matrix_c", 1.0);
    c.c_tors = real_field(j, "c_tors", 1.0);
    c.gamma1 = real_field(j, "gamma1", 0.0);
    c.gamma2 = real_field(j, "gamma2", 0.0);
    c.gamma3 = real_field(j, "gamma3", 0.0);
    c.szpiro_c_eps_d = real_field(j, "szpiro_c_eps_d", 0.0);
    c.check();
    return c;
}

}  // namespace bsdlab
