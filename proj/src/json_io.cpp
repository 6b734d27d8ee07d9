#include "bsarr/json_io.hpp"

#include "bsarr/errors.hpp"

namespace bsarr {

namespace {

const Json& expect_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key))
        throw StructuralError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int expect_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw StructuralError(where + ": expected an integer");
    return j.get<int>();
}

std::string expect_string(const Json& j, const std::string& where) {
    if (!j.is_string()) throw StructuralError(where + ": expected a string");
    return j.get<std::string>();
}

const Json& expect_array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw StructuralError(where + ": expected an array");
    return j;
}

std::vector<mpz_class> int_vector_from_json(const Json& j, const std::string& where) {
    expect_array(j, where);
    std::vector<mpz_class> out;
    for (const auto& x : j) {
        Rational r = rational_from_json(x, where);
        if (!r.is_integer()) throw StructuralError(where + ": expected integer entries");
        out.push_back(r.numerator());
    }
    return out;
}

}  // namespace

Json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(mpz_class(j.get<long>()));
    if (!j.is_string()) throw StructuralError(where + ": expected a rational string");
    return Rational::parse(j.get<std::string>());
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json exps = Json::array();
        for (int x : e) exps.push_back(x);
        terms.push_back(Json::array({rational_to_json(c), exps}));
    }
    return Json{{"vars", p.vars()}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
    const std::string where = "polynomial";
    std::vector<std::string> vars;
    for (const auto& v : expect_array(expect_field(j, "vars", where), where + ".vars"))
        vars.push_back(expect_string(v, where + ".vars"));
    Poly p(vars);
    for (const auto& t : expect_array(expect_field(j, "terms", where), where + ".terms")) {
        expect_array(t, where + ".term");
        if (t.size() != 2) throw StructuralError(where + ": term must be [coeff, exponents]");
        Rational c = rational_from_json(t[0], where + ".coeff");
        Exponents e;
        for (const auto& x : expect_array(t[1], where + ".exponents")) {
            int v = expect_int(x, where + ".exponent");
            if (v < 0) throw StructuralError(where + ": negative exponent");
            e.push_back(v);
        }
        if (e.size() != vars.size())
            throw StructuralError(where + ": exponent vector length mismatch");
        p.add_term(e, c);
    }
    return p;
}

Json module_to_json(const PolyModule& m) {
    Json gens = Json::array();
    for (const auto& g : m.generators) {
        Json tuple = Json::array();
        for (const auto& p : g.comps()) tuple.push_back(poly_to_json(p)["terms"]);
        gens.push_back(tuple);
    }
    return Json{{"vars", m.vars}, {"ambient_rank", m.ambient_rank}, {"generators", gens}};
}

PolyModule module_from_json(const Json& j) {
    const std::string where = "module";
    PolyModule m;
    for (const auto& v : expect_array(expect_field(j, "vars", where), where + ".vars"))
        m.vars.push_back(expect_string(v, where + ".vars"));
    m.ambient_rank = expect_int(expect_field(j, "ambient_rank", where), where + ".ambient_rank");
    for (const auto& g : expect_array(expect_field(j, "generators", where), where)) {
        expect_array(g, where + ".generator");
        std::vector<Poly> comps;
        for (const auto& terms : g) {
            Json pj{{"vars", m.vars}, {"terms", terms}};
            comps.push_back(poly_from_json(pj));
        }
        m.generators.emplace_back(std::move(comps));
    }
    m.validate();
    return m;
}

Json arrangement_to_json(const Arrangement& a) {
    Json forms = Json::array();
    for (const auto& f : a.forms()) {
        Json coeffs = Json::array();
        for (const auto& c : f.coeffs) coeffs.push_back(c.get_str());
        forms.push_back(Json{{"coeffs", coeffs}, {"mult", f.mult}});
    }
    Json out{{"n", a.n()}, {"forms", forms}};
    if (!a.label().empty()) out["label"] = a.label();
    return out;
}

Arrangement arrangement_from_json(const Json& j) {
    const std::string where = "arrangement";
    int n = expect_int(expect_field(j, "n", where), where + ".n");
    std::vector<std::vector<Rational>> forms;
    std::vector<int> mults;
    for (const auto& f : expect_array(expect_field(j, "forms", where), where + ".forms")) {
        std::vector<Rational> coeffs;
        for (const auto& c : expect_array(expect_field(f, "coeffs", where + ".form"),
                                          where + ".coeffs"))
            coeffs.push_back(rational_from_json(c, where + ".coeffs"));
        int mult = 1;
        if (f.contains("mult")) mult = expect_int(f.at("mult"), where + ".mult");
        forms.push_back(std::move(coeffs));
        mults.push_back(mult);
    }
    std::string label;
    if (j.contains("label")) label = expect_string(j.at("label"), where + ".label");
    return Arrangement(n, std::move(forms), std::move(mults), std::move(label));
}

std::optional<Factorization> factorization_from_json(const Json& arrangement_json,
                                                     const Arrangement& a) {
    if (!arrangement_json.contains("factorization")) return std::nullopt;
    return factorization_from_groups_json(arrangement_json.at("factorization"), a.degree());
}

Json factorization_to_json(const Factorization& f) {
    Json out = Json::array();
    for (const auto& g : f.groups) out.push_back(g);
    return out;
}

Factorization factorization_from_groups_json(const Json& groups, int degree) {
    const std::string where = "factorization";
    Factorization f;
    for (const auto& g : expect_array(groups, where)) {
        std::vector<int> idx;
        for (const auto& i : expect_array(g, where + ".group"))
            idx.push_back(expect_int(i, where + ".index"));
        f.groups.push_back(std::move(idx));
    }
    f.validate(degree);
    return f;
}

Json locus_to_json(const BSLocus& l) {
    Json hs = Json::array();
    for (const auto& h : l.hyperplanes) {
        Json coeffs = Json::array();
        for (const auto& c : h.coeffs) coeffs.push_back(c.get_str());
        hs.push_back(Json{{"coeffs", coeffs}, {"constant", h.constant.get_str()}});
    }
    Json out{{"r", l.r}, {"hyperplanes", hs}};
    if (l.entire_space) out["entire_space"] = true;
    if (!l.warnings.empty()) out["warnings"] = l.warnings;
    return out;
}

BSLocus locus_from_json(const Json& j) {
    const std::string where = "locus";
    BSLocus l;
    l.r = expect_int(expect_field(j, "r", where), where + ".r");
    if (l.r <= 0) throw StructuralError(where + ": r must be positive");
    for (const auto& h :
         expect_array(expect_field(j, "hyperplanes", where), where + ".hyperplanes")) {
        auto coeffs = int_vector_from_json(expect_field(h, "coeffs", where + ".hyperplane"),
                                           where + ".coeffs");
        if (static_cast<int>(coeffs.size()) != l.r)
            throw StructuralError(where + ": hyperplane coefficient length mismatch");
        Rational c = rational_from_json(expect_field(h, "constant", where + ".hyperplane"),
                                        where + ".constant");
        if (!c.is_integer()) throw StructuralError(where + ": constant must be an integer");
        l.insert(SHyperplane(std::move(coeffs), c.numerator()));
    }
    if (j.contains("entire_space")) l.entire_space = j.at("entire_space").get<bool>();
    if (j.contains("warnings"))
        for (const auto& w : expect_array(j.at("warnings"), where + ".warnings"))
            l.warnings.push_back(expect_string(w, where + ".warning"));
    return l;
}

Json product_to_json(const BSProduct& p) {
    Json fs = Json::array();
    for (const auto& [h, m] : p.factors) {
        Json coeffs = Json::array();
        for (const auto& c : h.coeffs) coeffs.push_back(c.get_str());
        fs.push_back(Json{{"coeffs", coeffs}, {"constant", h.constant.get_str()}, {"mult", m}});
    }
    Json out{{"r", p.r}, {"factors", fs}};
    if (!p.flags.empty()) out["flags"] = p.flags;
    return out;
}

BSProduct product_from_json(const Json& j) {
    const std::string where = "product";
    BSProduct p;
    p.r = expect_int(expect_field(j, "r", where), where + ".r");
    for (const auto& f : expect_array(expect_field(j, "factors", where), where + ".factors")) {
        auto coeffs = int_vector_from_json(expect_field(f, "coeffs", where + ".factor"),
                                           where + ".coeffs");
        Rational c =
            rational_from_json(expect_field(f, "constant", where + ".factor"), where + ".constant");
        int mult = expect_int(expect_field(f, "mult", where + ".factor"), where + ".mult");
        if (!c.is_integer()) throw StructuralError(where + ": constant must be an integer");
        p.add_factor(SHyperplane(std::move(coeffs), c.numerator()), mult);
    }
    if (j.contains("flags"))
        for (const auto& fl : expect_array(j.at("flags"), where + ".flags"))
            p.flags.push_back(expect_string(fl, where + ".flag"));
    return p;
}

Json lattice_to_json(const Lattice& lat) {
    Json edges = Json::array();
    for (const auto& e : lat.edges) {
        Json basis = Json::array();
        for (const auto& row : e.basis) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(c.get_str());
            basis.push_back(r);
        }
        edges.push_back(Json{{"rank", e.rank},
                             {"J", e.J},
                             {"d_X", e.d_X},
                             {"indecomposable", e.indecomposable},
                             {"basis", basis}});
    }
    Json pairs = Json::array();
    for (auto [i, j] : lat.containments) pairs.push_back(Json::array({i, j}));
    return Json{{"edges", edges}, {"containments", pairs}};
}

}  // namespace bsarr
