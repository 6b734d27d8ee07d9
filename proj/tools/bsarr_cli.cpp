// bsarr: hyperplane-arrangement combinatorics, Bernstein-Sato zero-locus
// predictions, and syzygy-based logarithmic derivations/forms.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bsarr/errors.hpp"
#include "bsarr/json_io.hpp"
#include "bsarr/logarithmic.hpp"
#include "bsarr/parse.hpp"

using namespace bsarr;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw StructuralError("malformed JSON in '" + path + "' at byte " +
                              std::to_string(e.byte) + ": " + e.what());
    }
}

Json parse_inline_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw StructuralError("malformed " + what + " at byte " + std::to_string(e.byte) + ": " +
                              e.what());
    }
}

struct ArrangementInput {
    std::string path;
    std::string factorization = "default";  // default|linear|trivial|inline JSON

    Arrangement load() const { return arrangement_from_json(read_json_file(path)); }

    Factorization load_factorization(const Arrangement& a) const {
        if (factorization == "linear") return linear_factorization(a);
        if (factorization == "trivial") return trivial_factorization(a);
        if (factorization == "default") {
            auto from_file = factorization_from_json(read_json_file(path), a);
            return from_file ? *from_file : linear_factorization(a);
        }
        return factorization_from_groups_json(
            parse_inline_json(factorization, "factorization"), a.degree());
    }
};

struct PolyInput {
    std::string expr;
    std::string json_path;
    std::string vars_csv;

    Poly load() const {
        if (!json_path.empty()) return poly_from_json(read_json_file(json_path));
        if (expr.empty()) throw StructuralError("no polynomial given (use --poly or --poly-json)");
        if (vars_csv.empty()) return parse_poly(expr);
        std::vector<std::string> vars;
        std::string cur;
        for (char c : vars_csv) {
            if (c == ',') {
                if (!cur.empty()) vars.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        if (!cur.empty()) vars.push_back(cur);
        return parse_poly(expr, vars);
    }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json poly_terms_json(const Poly& p) { return poly_to_json(p)["terms"]; }

Json tame_report_json(const TameReport& rep) {
    Json per_k = Json::array();
    for (const auto& pk : rep.per_k) {
        Json e{{"k", pk.k}, {"within", pk.within}};
        if (pk.proj_dim)
            e["proj_dim"] = *pk.proj_dim;
        else
            e["proj_dim"] = pk.capped ? "capped" : "exceeds cap";
        per_k.push_back(e);
    }
    Json out{{"tame", rep.tame}, {"reason", rep.reason}};
    if (!rep.per_k.empty()) out["per_k"] = per_k;
    if (rep.partial) out["partial"] = true;
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"hyperplane arrangements, Bernstein-Sato loci, logarithmic modules"};
    app.require_subcommand(1);
    int degree_cap = 0;
    app.add_option("--degree-cap", degree_cap,
                   "Groebner degree cap (also via BSARR_DEGREE_CAP; default 30)");

    ArrangementInput arr_in;
    PolyInput poly_in;
    std::string other_path, locus_path, partition_json, factorization_json;
    int k_arg = 1, n_arg = 0, d_arg = 0, max_k = -1, maisonobe_n = -1;

    auto add_arr = [&](CLI::App* cmd, bool with_fact = true) {
        cmd->add_option("--arr", arr_in.path, "arrangement JSON file")->required();
        if (with_fact)
            cmd->add_option("--factorization", arr_in.factorization,
                            "linear | trivial | inline JSON [[0,1],[2]] (default: the file's "
                            "factorization field, else linear)");
    };
    auto add_poly = [&](CLI::App* cmd) {
        cmd->add_option("--poly", poly_in.expr, "polynomial, e.g. \"x^2*y^2\"");
        cmd->add_option("--poly-json", poly_in.json_path, "polynomial JSON file");
        cmd->add_option("--vars", poly_in.vars_csv, "ambient variables, e.g. x,y,z");
    };

    auto* c_lattice = app.add_subcommand("lattice", "intersection lattice with edge statistics");
    add_arr(c_lattice, false);

    auto* c_lower = app.add_subcommand("bs-lower", "lower bound for Z(B_F^1)");
    add_arr(c_lower);
    auto* c_upper = app.add_subcommand("bs-upper", "upper bound for Z(B_F^1)");
    add_arr(c_upper);

    auto* c_generic = app.add_subcommand("bs-generic", "Bernstein-Sato ideal of a generic arrangement");
    add_arr(c_generic);

    auto* c_walther = app.add_subcommand("bfunction-generic",
                                         "b-function of a generic arrangement (n, d)");
    c_walther->add_option("--n", n_arg, "ambient dimension")->required();
    c_walther->add_option("--d", d_arg, "number of hyperplanes")->required();

    auto* c_mais = app.add_subcommand("maisonobe", "product element of B_F^a (linear factorization)");
    add_arr(c_mais, false);
    c_mais->add_option("--N", maisonobe_n, "ladder length (default 2d-n-2, clamped at 0)");

    auto* c_diag = app.add_subcommand("diagonal", "pull a locus back along a coarsening");
    c_diag->add_option("--locus", locus_path, "locus JSON file")->required();
    c_diag->add_option("--partition", partition_json,
                       "blocks over the s-variables, e.g. [[0,1,2]] (default: one block)");

    auto* c_coarsen = app.add_subcommand("coarsen", "merge factorization groups");
    c_coarsen->add_option("--factorization", factorization_json, "groups JSON")->required();
    c_coarsen->add_option("--partition", partition_json, "blocks over the groups")->required();

    auto* c_logder = app.add_subcommand("log-der", "generators of Der(-log f)");
    add_poly(c_logder);
    auto* c_logforms = app.add_subcommand("log-forms", "numerator module of Omega^k(log f)");
    add_poly(c_logforms);
    c_logforms->add_option("--k", k_arg, "form degree")->required();

    auto* c_ann = app.add_subcommand("annihilator", "psi_F of the log derivation generators");
    add_arr(c_ann);

    auto* c_free = app.add_subcommand("check-free", "Saito freeness with determinant certificate");
    add_poly(c_free);

    auto* c_tame = app.add_subcommand("check-tame", "tameness report");
    add_poly(c_tame);
    c_tame->add_option("--arr", arr_in.path, "arrangement JSON file (enables shortcuts)");
    c_tame->add_option("--max-k", max_k, "resolve log-form modules up to this degree");

    auto* c_euler = app.add_subcommand("check-euler", "strong Euler-homogeneity at the origin");
    add_poly(c_euler);

    auto* c_verify = app.add_subcommand("verify-appendix",
                                        "twist/contraction/pairing identities for log forms");
    add_poly(c_verify);

    auto* c_iso = app.add_subcommand("lattice-iso", "hyperplane-induced lattice isomorphism");
    add_arr(c_iso, false);
    c_iso->add_option("--other", other_path, "second arrangement JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    GroebnerOptions opts;
    if (degree_cap > 0) opts.degree_cap = degree_cap;

    if (c_lattice->parsed()) {
        Arrangement a = arr_in.load();
        Json out = lattice_to_json(intersection_lattice(a));
        out["n"] = a.n();
        out["degree"] = a.degree();
        if (!a.label().empty()) out["label"] = a.label();
        out["saito_holonomic"] = saito_holonomic_note(true);
        emit(out);
        return 0;
    }
    if (c_lower->parsed() || c_upper->parsed()) {
        Arrangement a = arr_in.load();
        Factorization f = arr_in.load_factorization(a);
        BSLocus l = c_lower->parsed() ? lower_locus(a, f) : upper_locus(a, f);
        emit(locus_to_json(l));
        return 0;
    }
    if (c_generic->parsed()) {
        Arrangement a = arr_in.load();
        Factorization f = arr_in.load_factorization(a);
        GenericIdealResult res = generic_ideal(a, f);
        if (res.product) {
            emit(product_to_json(*res.product));
        } else {
            Json out = locus_to_json(*res.locus);
            out["flags"] = res.flags;
            emit(out);
        }
        return 0;
    }
    if (c_walther->parsed()) {
        emit(product_to_json(walther_bfunction(n_arg, d_arg)));
        return 0;
    }
    if (c_mais->parsed()) {
        Arrangement a = arr_in.load();
        int N = maisonobe_n >= 0 ? maisonobe_n : std::max(0, 2 * a.degree() - a.n() - 2);
        Json out = product_to_json(maisonobe_element(a, linear_factorization(a), N));
        out["N"] = N;
        emit(out);
        return 0;
    }
    if (c_diag->parsed()) {
        Json lj = read_json_file(locus_path);
        // accept a product file too, reading off its reduced zero locus
        BSLocus l = lj.contains("factors") ? product_from_json(lj).radical_locus()
                                           : locus_from_json(lj);
        CoarseningMap c;
        if (partition_json.empty()) {
            c.blocks.emplace_back();
            for (int i = 0; i < l.r; ++i) c.blocks[0].push_back(i);
        } else {
            for (const auto& b : parse_inline_json(partition_json, "partition")) {
                std::vector<int> block;
                for (const auto& i : b) block.push_back(i.get<int>());
                c.blocks.push_back(std::move(block));
            }
        }
        BSLocus pulled = pullback_locus(l, c);
        if (c.m() == 1) {
            DiagonalRoots roots = diagonal_roots(l);
            Json rs = Json::array();
            for (const auto& r : roots.roots) rs.push_back(r.str());
            Json out{{"roots", rs}};
            if (roots.entire_diagonal) out["entire_diagonal"] = true;
            emit(out);
        } else {
            emit(locus_to_json(pulled));
        }
        return 0;
    }
    if (c_coarsen->parsed()) {
        Json groups = parse_inline_json(factorization_json, "factorization");
        int degree = 0;
        for (const auto& g : groups) degree += static_cast<int>(g.size());
        Factorization f = factorization_from_groups_json(groups, degree);
        CoarseningMap c;
        for (const auto& b : parse_inline_json(partition_json, "partition")) {
            std::vector<int> block;
            for (const auto& i : b) block.push_back(i.get<int>());
            c.blocks.push_back(std::move(block));
        }
        emit(Json{{"factorization", factorization_to_json(coarsen(f, c))}});
        return 0;
    }
    if (c_logder->parsed()) {
        Poly f = poly_in.load();
        emit(module_to_json(log_derivations(f, opts)));
        return 0;
    }
    if (c_logforms->parsed()) {
        Poly f = poly_in.load();
        LogFormNumerators forms = log_k_forms(f, k_arg, opts);
        Json out = module_to_json(forms.module);
        out["k"] = forms.k;
        out["subsets"] = forms.subsets;
        emit(out);
        return 0;
    }
    if (c_ann->parsed()) {
        Arrangement a = arr_in.load();
        Factorization fct = arr_in.load_factorization(a);
        std::vector<std::string> vars = Arrangement::default_vars(a.n());
        // factor polynomials: product of the linear forms in each group
        std::vector<Poly> factors;
        std::vector<int> expanded_entry = a.expanded_entry();
        for (const auto& group : fct.groups) {
            Poly g = Poly::constant(vars, Rational(1));
            for (int idx : group) {
                const auto& entry = a.forms()[expanded_entry[idx]];
                Poly l = Poly::zero(vars);
                for (int j = 0; j < a.n(); ++j)
                    if (entry.coeffs[j] != 0)
                        l += Poly::variable(vars, j).scaled(Rational(entry.coeffs[j]));
                g *= l;
            }
            factors.push_back(std::move(g));
        }
        auto elems = annihilator_generators(factors, opts);
        Json out;
        out["vars"] = vars;
        out["r"] = fct.r();
        Json list = Json::array();
        for (const auto& e : elems) {
            Json derivation = Json::array();
            for (const auto& p : e.derivation.comps()) derivation.push_back(poly_terms_json(p));
            Json slin = Json::array();
            for (const auto& p : e.s_linear) slin.push_back(poly_terms_json(p));
            list.push_back(Json{{"derivation", derivation}, {"s_linear", slin}});
        }
        out["elements"] = list;
        emit(out);
        return 0;
    }
    if (c_free->parsed()) {
        Poly f = poly_in.load();
        SaitoResult res = is_free_saito(f, opts);
        Json out{{"free", res.free}, {"minimal_generators", res.minimal_generators}};
        if (res.certificate) {
            Json basis = Json::array();
            for (const auto& b : res.certificate->basis) {
                Json tuple = Json::array();
                for (const auto& p : b.comps()) tuple.push_back(poly_terms_json(p));
                basis.push_back(tuple);
            }
            out["certificate"] = Json{{"basis", basis},
                                      {"det", poly_to_json(res.certificate->det)},
                                      {"unit", res.certificate->unit.str()}};
        }
        emit(out);
        return 0;
    }
    if (c_tame->parsed()) {
        if (!arr_in.path.empty()) {
            Arrangement a = arr_in.load();
            bool generic = false;
            try {
                generic = is_generic(a).applicable();
            } catch (const DomainError&) {
                // non-reduced: tameness only depends on the reduced structure
            }
            Poly f = a.defining_polynomial();
            TameReport rep = tame_check(f, max_k, generic, opts);
            Json out = tame_report_json(rep);
            out["saito_holonomic"] = saito_holonomic_note(true);
            emit(out);
        } else {
            Poly f = poly_in.load();
            TameReport rep = tame_check(f, max_k, false, opts);
            Json out = tame_report_json(rep);
            out["saito_holonomic"] = saito_holonomic_note(false);
            emit(out);
        }
        return 0;
    }
    if (c_euler->parsed()) {
        Poly f = poly_in.load();
        EulerReport rep = strong_euler_check(f);
        Json out;
        switch (rep.verdict) {
            case EulerVerdict::True: out["result"] = "true"; break;
            case EulerVerdict::Undecided: out["result"] = "undecided"; break;
            case EulerVerdict::NotApplicable: out["result"] = "not-applicable"; break;
        }
        if (rep.weights) {
            Json ws = Json::array();
            for (const auto& w : *rep.weights) ws.push_back(w.str());
            out["weights"] = ws;
        }
        emit(out);
        return 0;
    }
    if (c_verify->parsed()) {
        Poly f = poly_in.load();
        bool twist = true;
        for (int k = 0; k <= f.nvars(); ++k) twist = twist && verify_twist_identity(f, k, opts);
        ExteriorSquareReport ext = exterior_square_check(f, opts);
        emit(Json{{"twist", twist},
                  {"contraction", contraction_check(f, opts)},
                  {"pairing", pairing_check(f, opts)},
                  {"exterior_square_strict", ext.contains_omega2 && ext.strict}});
        return 0;
    }
    if (c_iso->parsed()) {
        Arrangement a = arr_in.load();
        Arrangement b = arrangement_from_json(read_json_file(other_path));
        emit(Json{{"isomorphic", lattice_isomorphic(a, b)}});
        return 0;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const StructuralError& e) {
        emit(Json{{"code", "structural_error"}, {"message", e.what()}});
        return 2;
    } catch (const DomainError& e) {
        emit(Json{{"code", "domain_error"}, {"message", e.what()}});
        return 2;
    } catch (const CapExceededError& e) {
        emit(Json{{"code", "cap_exceeded"},
                  {"message", e.what()},
                  {"detail", Json{{"degree", e.degree}, {"cap", e.cap}}}});
        return 2;
    } catch (const std::exception& e) {
        emit(Json{{"code", "internal_error"}, {"message", e.what()}});
        return 1;
    }
}
