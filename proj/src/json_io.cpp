#include "orbicert/json_io.hpp"

#include <sstream>

namespace orbicert {

namespace {

json int_or_string(const mpz_class& z) {
    if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
    return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
    if (j.is_string()) return mpz_class(j.get<std::string>());
    return mpz_class(std::to_string(j.get<long long>()));
}

}  // namespace

json rat_to_json(const Rat& r) {
    return json{{"num", int_or_string(r.get_num())}, {"den", int_or_string(r.get_den())}};
}

Rat rat_from_json(const json& j) {
    // Accepts {"num":..,"den":..}, a bare integer, or a string like "-3/2".
    if (j.is_number_integer()) return Rat(mpz_from_json(j));
    if (j.is_string()) {
        Rat r(j.get<std::string>());
        r.canonicalize();
        return r;
    }
    Rat r(mpz_from_json(j.at("num")), mpz_from_json(j.value("den", json(1))));
    r.canonicalize();
    return r;
}

json kform_to_json(const KForm& f) {
    json terms = json::array();
    for (const auto& [mask, c] : f.terms()) {
        json t;
        t["idx"] = KForm::mask_to_indices(mask);
        t["num"] = int_or_string(c.get_num());
        t["den"] = int_or_string(c.get_den());
        terms.push_back(std::move(t));
    }
    return json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

KForm kform_from_json(const json& j) {
    KForm f(j.at("degree").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<int> idx = t.at("idx").get<std::vector<int>>();
        Rat c(mpz_from_json(t.at("num")), mpz_from_json(t.at("den")));
        c.canonicalize();
        f = f + KForm::monomial(idx, c);
    }
    return f;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    int r = static_cast<int>(j.size());
    int c = r ? static_cast<int>(j.at(0).size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) m(i, k) = rat_from_json(j.at(i).at(k));
    return m;
}

json rep_to_json(const FlatRep& r) {
    json images;
    for (const auto& name : kGeneratorNames) images[name] = mat_to_json(r.image(name));
    return json{{"n", r.n}, {"images", std::move(images)}};
}

FlatRep rep_from_json(const json& j) {
    FlatRep r;
    r.n = j.at("n").get<int>();
    for (const auto& name : kGeneratorNames)
        r.images.emplace(name, mat_from_json(j.at("images").at(name)));
    return r;
}

json cert_report_to_json(const CertReport& c) {
    json out{{"valid", c.valid},
             {"violated", c.violated},
             {"h0", c.h0},
             {"h1", c.h1},
             {"h2", c.h2},
             {"irreducible", c.irreducible},
             {"rigid", c.rigid},
             {"unobstructed", c.unobstructed}};
    if (c.witness) {
        out["witness"] = json{{"element", mat_to_json(c.witness->element)},
                              {"gamma_sign", c.witness->gamma_sign},
                              {"delta_sign", c.witness->delta_sign}};
    }
    return out;
}

json token_tuple_to_json(const TokenTuple& t) {
    static const char* slots[5] = {"gamma", "delta", "tau4", "tau5", "tau8"};
    json signs;
    for (int k = 0; k < 5; ++k) {
        json v = json::array();
        for (int p = 0; p < t.n; ++p) v.push_back((t.tok[k] & (1u << p)) ? -1 : 1);
        signs[slots[k]] = std::move(v);
    }
    json out{{"n", t.n}, {"signs", std::move(signs)}};
    if (t.n == 3 || t.n == 4) {
        json names;
        for (int k = 0; k < 5; ++k) names[slots[k]] = token_name(t.n, t.tok[k]);
        out["tokens"] = std::move(names);
    }
    return out;
}

namespace {

json check(const std::string& name, bool pass) {
    return json{{"name", name}, {"pass", pass}};
}

// S-operator built from an arbitrary 4-form (used to report the eigenvalues
// the swapped index convention would produce).
std::pair<int, int> s_eigenvalues_for(const KForm& omega) {
    auto e = lambda27_basis();
    KForm se1 = hodge_star(wedge(omega, e[0]));
    KForm t = KForm::monomial({1, 2}) - KForm::monomial({3, 4});
    KForm st = hodge_star(wedge(omega, t));
    int lam7 = 0, lam21 = 0;
    for (int l : {3, -3, 1, -1})
        if (se1 == e[0].scaled(l)) lam7 = l;
    for (int l : {3, -3, 1, -1})
        if (st == t.scaled(l)) lam21 = l;
    return {lam7, lam21};
}

}  // namespace

json selftest_report() {
    json checks = json::array();
    const KForm om = cayley_form();
    const KForm vol = KForm::monomial({1, 2, 3, 4, 5, 6, 7, 8});
    auto e = lambda27_basis();

    {
        bool ok = om.terms().size() == 14;
        for (const auto& [m, c] : om.terms()) ok = ok && (c == 1 || c == -1);
        checks.push_back(check("cayley form has 14 terms, coefficients +-1", ok));
    }
    checks.push_back(check("*omega0 = omega0", hodge_star(om) == om));
    checks.push_back(check("omega0 ^ omega0 = 14 vol", wedge(om, om) == vol.scaled(14)));
    {
        // ** = (-1)^{k(8-k)} = +1 in even degree; exhaustive over monomials
        bool ok = true;
        for (int mask = 0; mask < 256 && ok; ++mask) {
            int pc = __builtin_popcount(mask);
            if (pc != 2 && pc != 4 && pc != 6) continue;
            KForm f(pc);
            f.add_term(static_cast<uint16_t>(mask), 1);
            ok = hodge_star(hodge_star(f)) == f;
        }
        checks.push_back(check("hodge star squares to the identity in even degree", ok));
    }
    {
        auto [l7, l21] = s_eigenvalues_for(om);
        checks.push_back(check("S eigenvalues 3 / -1 (standard index convention)",
                               l7 == 3 && l21 == -1));
        auto [s7, s21] = s_eigenvalues_for(om.scaled(-1));
        json j = check("S eigenvalues under the last-two-swapped convention", true);
        j["eigenvalues"] = {s7, s21};
        j["note"] = "the swapped convention negates the 4-form and flips the eigenvalues; "
                    "the standard convention is used throughout";
        checks.push_back(std::move(j));
    }
    {
        bool ok = true;
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) != 2) continue;
            KForm f(2);
            f.add_term(static_cast<uint16_t>(mask), 1);
            KForm s = s_operator(f);
            if (s_operator(s) != s.scaled(2) + f.scaled(3)) ok = false;
        }
        checks.push_back(check("S^2 = 2S + 3 on all 28 basis 2-forms", ok));
    }
    {
        CayleyStructure cs = cayley_structure();
        Mat id = Mat::identity(28);
        bool ok = cs.projector7 + cs.projector21 == id;
        ok = ok && cs.projector7 * cs.projector7 == cs.projector7;
        ok = ok && cs.projector21 * cs.projector21 == cs.projector21;
        ok = ok && cs.s_matrix == cs.s_matrix.transpose();
        ok = ok && cs.s_matrix * cs.projector7 == cs.projector7.scaled(3);
        ok = ok && cs.s_matrix * cs.projector21 == cs.projector21.scaled(-1);
        ok = ok && nullspace(cs.projector7 - id).dimension == 7;
        ok = ok && nullspace(cs.projector21 - id).dimension == 21;
        checks.push_back(check("projector algebra (idempotent, ranks 7/21, symmetric)", ok));
    }
    {
        bool ok = true;
        for (int i = 0; i < 7; ++i) {
            ok = ok && s_operator(e[i]) == e[i].scaled(3);
            for (int j = 0; j < 7; ++j)
                ok = ok && inner_product(e[i], e[j]) == (i == j ? 4 : 0);
        }
        checks.push_back(check("e-basis: eigenvalue 3, pairwise orthogonal, norm^2 = 4", ok));
    }
    {
        bool ok = true;
        for (const char* g : {"alpha", "beta", "gamma", "delta"})
            ok = ok && pullback(holonomy({g}), om) == om;
        checks.push_back(check("the four point holonomies preserve omega0", ok));
    }
    {
        auto diag_signs = [](const Mat& m) {
            std::vector<int> s;
            for (int i = 0; i < 7; ++i) s.push_back(m(i, i) == 1 ? 1 : -1);
            return s;
        };
        bool ok =
            diag_signs(induced_matrix_on_lambda27(holonomy({"alpha"}))) ==
                std::vector<int>{1, 1, 1, -1, -1, -1, -1} &&
            diag_signs(induced_matrix_on_lambda27(holonomy({"beta"}))) ==
                std::vector<int>{1, 1, 1, -1, -1, -1, -1} &&
            diag_signs(induced_matrix_on_lambda27(holonomy({"gamma"}))) ==
                std::vector<int>{1, -1, -1, 1, 1, -1, -1} &&
            diag_signs(induced_matrix_on_lambda27(holonomy({"delta"}))) ==
                std::vector<int>{-1, 1, -1, 1, -1, 1, -1};
        checks.push_back(check("sign action of the point holonomies on e_1..e_7", ok));
    }
    {
        auto rels = verify_relations();
        bool ok = true;
        for (const auto& r : rels) ok = ok && r.holds;
        json j = check("group presentation relations", ok);
        j["relations_checked"] = rels.size();
        checks.push_back(std::move(j));
    }
    {
        auto census = singular_locus_census();
        bool ok = census.count_type2 == 8 && census.count_type3 == 64 &&
                  census.count_type1 == 4 && census.strata.size() == 76;
        checks.push_back(check("singular locus census totals (8, 64, 4)", ok));
    }
    {
        // Quaternionic 2-form triples on the two R^4 factors: omega0 equals
        // (1/2) w1^w1 + (1/2) m1^m1 - sum_i w_i^m_i, and m1^m2 vanishes.
        auto two = [](int i, int j, int s1, int k, int l, int s2) {
            KForm f(2);
            f.add_term((1u << (i - 1)) | (1u << (j - 1)), s1);
            f.add_term((1u << (k - 1)) | (1u << (l - 1)), s2);
            return f;
        };
        KForm m1 = two(1, 2, 1, 3, 4, 1), m2 = two(1, 3, 1, 2, 4, -1), m3 = two(1, 4, 1, 2, 3, 1);
        KForm w1 = two(5, 6, -1, 7, 8, -1), w2 = two(5, 7, -1, 6, 8, 1), w3 = two(5, 8, 1, 6, 7, 1);
        KForm rhs = wedge(w1, w1).scaled(Rat(1, 2)) + wedge(m1, m1).scaled(Rat(1, 2)) -
                    wedge(w1, m1) - wedge(w2, m2) - wedge(w3, m3);
        bool ok = rhs == om && wedge(m1, m2).is_zero();
        checks.push_back(check("quaternionic-triple identity for omega0 (and m1^m2 = 0)", ok));
    }
    {
        std::set<std::array<int, 8>> linears;
        for (const auto& g : residual_group()) linears.insert(g.linear);
        checks.push_back(check("point holonomies generate (Z/2)^4 of order 16",
                               linears.size() == 16));
    }

    bool ok = true;
    for (const auto& c : checks) ok = ok && c.at("pass").get<bool>();
    return json{{"ok", ok}, {"checks", std::move(checks)}};
}

json census_report() {
    auto census = singular_locus_census();
    json strata = json::array();
    for (const auto& s : census.strata) {
        json comps = json::array();
        for (const auto& c : s.components) {
            json fixed;
            for (const auto& [k, v] : c.fixed_coords)
                fixed["x" + std::to_string(k)] = rat_to_json(v);
            comps.push_back(json{{"fixed", std::move(fixed)},
                                 {"free", std::vector<int>(c.free_coords.begin(),
                                                           c.free_coords.end())}});
        }
        strata.push_back(json{{"label", "S" + std::to_string(s.label)},
                              {"element", s.element},
                              {"type", s.type},
                              {"neighbourhood", s.neighbourhood},
                              {"component_count", s.components.size()},
                              {"components", std::move(comps)}});
    }
    bool ok = census.count_type1 == 4 && census.count_type2 == 8 && census.count_type3 == 64;
    return json{{"ok", ok},
                {"totals", {{"type_i", census.count_type1},
                            {"type_ii", census.count_type2},
                            {"type_iii", census.count_type3}}},
                {"strata", std::move(strata)}};
}

namespace {

json orbit_record_json(const OrbitRecord& r) {
    return json{{"key", key_to_string(r.key)},
                {"tuple", token_tuple_to_json(r.representative)},
                {"orbit_size", r.orbit_size},
                {"cert", cert_report_to_json(r.cert)}};
}

}  // namespace

json catalog_report(const OrbitCatalog& cat) {
    json records = json::array();
    for (const auto& r : cat.certified) records.push_back(orbit_record_json(r));
    json out{{"ok", true},
             {"group", "so" + std::to_string(cat.n)},
             {"orbits", cat.certified.size()},
             {"raw_certified", cat.raw_certified},
             {"tau_configs_scanned", cat.tau_configs_scanned},
             {"tau_configs_distinct", cat.tau_configs_distinct},
             {"records", std::move(records)}};
    if (!cat.reducible.empty()) {
        json red = json::array();
        for (const auto& r : cat.reducible) red.push_back(orbit_record_json(r));
        out["reducible_admissible"] = std::move(red);
        out["reducible_orbits"] = cat.reducible.size();
    }
    return out;
}

std::string catalog_csv(const OrbitCatalog& cat) {
    std::ostringstream os;
    os << "bucket,key,gamma,delta,tau4,tau5,tau8,orbit_size,h0,h1,h2,"
          "irreducible,rigid,unobstructed\n";
    auto signs = [](int n, uint16_t bits) {
        std::string s;
        for (int p = 0; p < n; ++p) s += (bits & (1u << p)) ? '-' : '+';
        return s;
    };
    auto key_field = [](const OrbitKey& key) {
        // space-separated so the field stays comma-free
        std::string s = "[";
        for (size_t i = 0; i < key.size(); ++i)
            s += (i ? " " : "") + std::to_string(int(key[i]));
        return s + "]";
    };
    auto row = [&](const char* bucket, const OrbitRecord& r) {
        os << bucket << ',' << key_field(r.key);
        for (int k = 0; k < 5; ++k) os << ',' << signs(r.representative.n, r.representative.tok[k]);
        os << ',' << r.orbit_size << ',' << r.cert.h0 << ',' << r.cert.h1 << ',' << r.cert.h2
           << ',' << r.cert.irreducible << ',' << r.cert.rigid << ',' << r.cert.unobstructed
           << '\n';
    };
    for (const auto& r : cat.certified) row("certified", r);
    for (const auto& r : cat.reducible) row("reducible", r);
    return os.str();
}

json appendix_report_to_json(const AppendixReport& rep, int n) {
    return json{{"ok", rep.ok()},
                {"group", "so" + std::to_string(n)},
                {"entries", rep.entries},
                {"all_certified", rep.all_certified},
                {"pairwise_inequivalent", rep.pairwise_inequivalent},
                {"complete", rep.complete},
                {"failures", rep.failures}};
}

json nogo_report_to_json(const NogoReport& rep) {
    return json{{"ok", rep.ok},
                {"group", "so" + std::to_string(rep.n)},
                {"tau_configs_scanned", rep.tau_configs_scanned},
                {"tau_configs_with_repeat", rep.tau_configs_with_repeat},
                {"certified_orbits", rep.certified_orbits},
                {"invariant_plane_always", rep.invariant_plane_always},
                {"notes", rep.notes}};
}

json noncommutative_report() {
    json instances = json::array();
    bool ok = true;
    for (int mask = 0; mask < 8; ++mask) {
        FlatRep rep = noncommutative_so3_example(mask & 4, mask & 2, mask & 1);
        CertReport c = certify(rep);
        auto w = obstruction_witness(rep);
        bool good = c.valid && c.h2 >= 1 && w.has_value();
        ok = ok && good;
        json inst{{"tau4", bool(mask & 4)},
                  {"tau5", bool(mask & 2)},
                  {"tau8", bool(mask & 1)},
                  {"valid", c.valid},
                  {"h2", c.h2},
                  {"obstructed", c.h2 >= 1}};
        if (w)
            inst["witness"] = json{{"element", mat_to_json(w->element)},
                                   {"gamma_sign", w->gamma_sign},
                                   {"delta_sign", w->delta_sign}};
        instances.push_back(std::move(inst));
    }
    return json{{"ok", ok},
                {"family", "non-commuting so3 (gamma diagonal, delta an axis swap)"},
                {"instances", std::move(instances)}};
}

json gluing_check_to_json(const GluingCheck& chk, const PontryaginData& p) {
    json p1;
    for (const auto& [label, coeff] : p.p1_coefficients)
        p1["S" + std::to_string(label)] = rat_to_json(coeff);
    return json{{"ok", chk.ok},
                {"failures", chk.failures},
                {"p1_coefficients", std::move(p1)},
                {"p2", rat_to_json(p.p2)}};
}

json index_report(const IndexInputs& in) {
    return json{{"ok", true},
                {"index", rat_to_json(index_value(in))},
                {"inputs",
                 {{"dim_g", in.dim_g},
                  {"b0", in.b0},
                  {"b1", in.b1},
                  {"b2_7", in.b2_7},
                  {"I_pp", rat_to_json(in.I_pp)},
                  {"I_p2", rat_to_json(in.I_p2)},
                  {"I_q", rat_to_json(in.I_q)}}},
                {"grouping",
                 "-dim_g*(b0-b1+b2_7) + I_pp/24 - (I_p2 - 2*I_q)/12; the curvature-square "
                 "bracket is grouped as (p1(Ad P)^2 - 2 p2(Ad P))"}};
}

json decompose_report(const ALEBundleSpec& spec) {
    auto d = adjoint_decomposition(spec);
    return json{{"ok", true},
                {"m", spec.m},
                {"k", spec.k},
                {"n", spec.n()},
                {"s0", d.s0},
                {"s1", d.s1},
                {"s2", d.s2}};
}

}  // namespace orbicert
