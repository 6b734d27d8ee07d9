#include "bsarr/logarithmic.hpp"

#include <algorithm>
#include <functional>

#include "bsarr/errors.hpp"
#include "bsarr/qmatrix.hpp"

namespace bsarr {

namespace {

void require_nonconstant(const Poly& f, const char* op) {
    if (f.is_zero()) throw DomainError(std::string(op) + ": zero polynomial");
    if (f.is_constant()) throw DomainError(std::string(op) + ": constant polynomial");
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> go = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i <= n - (k - static_cast<int>(cur.size())); ++i) {
            cur.push_back(i);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

int subset_index(const std::vector<std::vector<int>>& subsets, const std::vector<int>& s) {
    auto it = std::find(subsets.begin(), subsets.end(), s);
    if (it == subsets.end()) throw StructuralError("internal: subset not found");
    return static_cast<int>(it - subsets.begin());
}

Poly det_poly(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc = Poly::zero(m[0][0].vars());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[i][c]);
            minor.push_back(std::move(row));
        }
        Poly term = m[0][j] * det_poly(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// division by a principal ideal: p in (g) iff g | p
bool in_principal(const Poly& p, const Poly& g) {
    if (p.is_zero()) return true;
    return Poly::try_divide_exact(p, g).has_value();
}

}  // namespace

PolyModule log_derivations(const Poly& f, const GroebnerOptions& opts) {
    require_nonconstant(f, "log_derivations");
    int n = f.nvars();
    std::vector<Poly> gens;
    for (int i = 0; i < n; ++i) gens.push_back(f.derivative(i));
    gens.push_back(f);
    PolyModule ideal = PolyModule::ideal(std::move(gens));
    if (f.is_homogeneous()) {
        // grade so that the syzygy tags come out homogeneous
        ideal.shifts = std::vector<int>{0};
    }
    PolyModule syz = syzygies(ideal, opts);

    PolyModule der;
    der.vars = f.vars();
    der.ambient_rank = n;
    for (const auto& s : syz.generators) {
        std::vector<Poly> head(s.comps().begin(), s.comps().begin() + n);
        VecPoly v(std::move(head));
        if (!v.is_zero()) der.generators.push_back(std::move(v));
    }
    if (f.is_homogeneous()) der.shifts = std::vector<int>(n, 0);
    return der;
}

std::vector<AnnihilatorElement> annihilator_generators(const std::vector<Poly>& factors,
                                                       const GroebnerOptions& opts) {
    if (factors.empty()) throw StructuralError("annihilator_generators: no factors");
    Poly f = factors[0];
    for (size_t k = 1; k < factors.size(); ++k) f *= factors[k];
    require_nonconstant(f, "annihilator_generators");

    PolyModule der = log_derivations(f, opts);
    std::vector<AnnihilatorElement> out;
    for (const auto& delta : der.generators) {
        AnnihilatorElement elem;
        elem.derivation = delta;
        for (size_t k = 0; k < factors.size(); ++k) {
            Poly applied = Poly::zero(f.vars());
            for (int i = 0; i < f.nvars(); ++i) applied += delta[i] * factors[k].derivative(i);
            auto q = Poly::try_divide_exact(applied, factors[k]);
            if (!q)
                throw DomainError("annihilator_generators: factor " + std::to_string(k + 1) +
                                  " (" + factors[k].str() +
                                  ") does not divide delta applied to it");
            elem.s_linear.push_back(std::move(*q));
        }
        out.push_back(std::move(elem));
    }
    return out;
}

SaitoResult is_free_saito(const Poly& f, const GroebnerOptions& opts) {
    require_nonconstant(f, "is_free_saito");
    if (!f.is_homogeneous()) throw DomainError("is_free_saito: input must be homogeneous");
    int n = f.nvars();
    PolyModule der = log_derivations(f, opts);
    std::vector<VecPoly> mins = minimal_generators(der, opts);

    SaitoResult res;
    res.minimal_generators = static_cast<int>(mins.size());
    if (res.minimal_generators != n) return res;

    std::vector<std::vector<Poly>> mat(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mat[i].push_back(mins[i][j]);
    Poly det = det_poly(mat);
    Poly f_red = squarefree_part(f);
    auto q = Poly::try_divide_exact(det, f_red);
    if (!q || !q->is_constant() || q->is_zero()) return res;

    res.free = true;
    res.certificate = SaitoCertificate{std::move(mins), std::move(det), q->leading_coeff()};
    return res;
}

VecPoly wedge_df(const Poly& f, const VecPoly& omega, int k) {
    int n = f.nvars();
    auto subs_k = k_subsets(n, k);
    auto subs_k1 = k_subsets(n, k + 1);
    if (omega.rank() != static_cast<int>(subs_k.size()))
        throw StructuralError("wedge_df: rank does not match C(n,k)");
    VecPoly out(f.vars(), std::max<size_t>(subs_k1.size(), 1));
    for (size_t K = 0; K < subs_k1.size(); ++K) {
        Poly acc = Poly::zero(f.vars());
        for (int t = 0; t <= k; ++t) {
            std::vector<int> I = subs_k1[K];
            int j = I[t];
            I.erase(I.begin() + t);
            Poly term = f.derivative(j) * omega[subset_index(subs_k, I)];
            acc += (t % 2 == 0) ? term : -term;
        }
        out[static_cast<int>(K)] = std::move(acc);
    }
    return out;
}

VecPoly derivation_as_top_form_numerator(const VecPoly& delta) {
    int n = delta.rank();
    // coordinates over the (n-1)-subsets in lex order: subset [n]\{i} sits at
    // index n-1-i
    VecPoly out(delta.vars(), n);
    for (int i = 0; i < n; ++i) {
        Poly c = delta[i];
        out[n - 1 - i] = (i % 2 == 0) ? c : -c;
    }
    return out;
}

VecPoly wedge_one_forms(const VecPoly& a, const VecPoly& b) {
    int n = a.rank();
    if (b.rank() != n) throw StructuralError("wedge_one_forms: rank mismatch");
    auto subs2 = k_subsets(n, 2);
    VecPoly out(a.vars(), std::max<size_t>(subs2.size(), 1));
    for (size_t K = 0; K < subs2.size(); ++K) {
        int i = subs2[K][0], j = subs2[K][1];
        out[static_cast<int>(K)] = a[i] * b[j] - a[j] * b[i];
    }
    return out;
}

LogFormNumerators log_k_forms(const Poly& f, int k, const GroebnerOptions& opts) {
    require_nonconstant(f, "log_k_forms");
    int n = f.nvars();
    if (k < 0 || k > n)
        throw DomainError("log_k_forms: k = " + std::to_string(k) + " outside [0, " +
                          std::to_string(n) + "]");
    LogFormNumerators out;
    out.k = k;
    out.subsets = k_subsets(n, k);
    int nk = static_cast<int>(out.subsets.size());
    out.module.vars = f.vars();
    out.module.ambient_rank = nk;

    if (k == n) {
        // no (k+1)-conditions: the full free module
        VecPoly unit(f.vars(), nk);
        unit[0] = Poly::constant(f.vars(), Rational(1));
        out.module.generators.push_back(std::move(unit));
        if (f.is_homogeneous()) out.module.shifts = std::vector<int>(nk, 0);
        return out;
    }

    auto subs_k1 = k_subsets(n, k + 1);
    int nk1 = static_cast<int>(subs_k1.size());

    // columns of [A | f*Id] as generators in R^{nk1}; syzygies project to omega
    PolyModule cols;
    cols.vars = f.vars();
    cols.ambient_rank = nk1;
    for (int I = 0; I < nk; ++I) {
        VecPoly unit(f.vars(), nk);
        unit[I] = Poly::constant(f.vars(), Rational(1));
        cols.generators.push_back(wedge_df(f, unit, k));
    }
    for (int K = 0; K < nk1; ++K) {
        VecPoly v(f.vars(), nk1);
        v[K] = f;
        cols.generators.push_back(std::move(v));
    }
    if (f.is_homogeneous()) cols.shifts = std::vector<int>(nk1, 0);

    PolyModule syz = syzygies(cols, opts);
    for (const auto& s : syz.generators) {
        std::vector<Poly> head(s.comps().begin(), s.comps().begin() + nk);
        VecPoly v(std::move(head));
        if (!v.is_zero()) out.module.generators.push_back(std::move(v));
    }
    if (f.is_homogeneous()) out.module.shifts = std::vector<int>(nk, 0);
    return out;
}

bool verify_twist_identity(const Poly& f, int k, const GroebnerOptions& opts) {
    Poly f_red = squarefree_part(f);
    PolyModule lhs = log_k_forms(f, k, opts).module;
    PolyModule rhs = log_k_forms(f_red, k, opts).module;
    lhs.shifts.reset();
    rhs.shifts.reset();
    return module_equal(lhs, rhs, opts);
}

ExteriorSquareReport exterior_square_check(const Poly& f, const GroebnerOptions& opts) {
    require_nonconstant(f, "exterior_square_check");
    ExteriorSquareReport rep;
    int n = f.nvars();
    if (n < 2) return rep;
    LogFormNumerators one = log_k_forms(f, 1, opts);
    std::vector<VecPoly> gens =
        f.is_homogeneous() ? minimal_generators(one.module, opts) : one.module.generators;

    PolyModule wedge_mod;
    wedge_mod.vars = f.vars();
    wedge_mod.ambient_rank = static_cast<int>(k_subsets(n, 2).size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            VecPoly w = wedge_one_forms(gens[i], gens[j]);
            if (!w.is_zero()) wedge_mod.generators.push_back(std::move(w));
        }
    if (wedge_mod.generators.empty()) return rep;

    LogFormNumerators two = log_k_forms(f, 2, opts);
    PolyModule scaled;
    scaled.vars = f.vars();
    scaled.ambient_rank = wedge_mod.ambient_rank;
    for (const auto& g : two.module.generators) scaled.generators.push_back(g.times(f));

    GroebnerBasis wedge_gb = buchberger(wedge_mod, {}, opts);
    rep.contains_omega2 = true;
    for (const auto& g : scaled.generators)
        if (!wedge_gb.contains(g)) {
            rep.contains_omega2 = false;
            break;
        }
    if (rep.contains_omega2) {
        GroebnerBasis scaled_gb = buchberger(scaled, {}, opts);
        for (const auto& w : wedge_mod.generators)
            if (!scaled_gb.contains(w)) {
                rep.strict = true;
                break;
            }
    }
    return rep;
}

bool contraction_check(const Poly& f, const GroebnerOptions& opts) {
    require_nonconstant(f, "contraction_check");
    Poly f_red = squarefree_part(f);
    PolyModule der = log_derivations(f, opts);
    LogFormNumerators forms = log_k_forms(f, 1, opts);
    for (const auto& chi : der.generators) {
        for (const auto& omega : forms.module.generators) {
            Poly pairing = Poly::zero(f.vars());
            for (int i = 0; i < f.nvars(); ++i) pairing += chi[i] * omega[i];
            if (!in_principal(pairing, f_red)) return false;
        }
    }
    return true;
}

bool pairing_check(const Poly& f, const GroebnerOptions& opts) {
    require_nonconstant(f, "pairing_check");
    Poly f_red = squarefree_part(f);
    int n = f.nvars();

    PolyModule der = log_derivations(f, opts);
    LogFormNumerators forms = log_k_forms(f, 1, opts);
    for (const auto& chi : der.generators) {
        for (const auto& omega : forms.module.generators) {
            Poly pairing = Poly::zero(f.vars());
            for (int i = 0; i < n; ++i) pairing += chi[i] * omega[i];
            if (!in_principal(pairing, f_red)) return false;
        }
    }

    if (!f.is_homogeneous()) return true;
    SaitoResult saito = is_free_saito(f, opts);
    if (!saito.free) return true;

    // free case: the pairing matrix over f_red must be unimodular
    std::vector<VecPoly> omega_basis = minimal_generators(forms.module, opts);
    if (static_cast<int>(omega_basis.size()) != n) return false;
    std::vector<std::vector<Poly>> pmat(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Poly pairing = Poly::zero(f.vars());
            for (int c = 0; c < n; ++c) pairing += saito.certificate->basis[i][c] * omega_basis[j][c];
            auto q = Poly::try_divide_exact(pairing, f_red);
            if (!q) return false;
            pmat[i].push_back(std::move(*q));
        }
    }
    Poly det = det_poly(pmat);
    return !det.is_zero() && det.is_constant();
}

EulerReport strong_euler_check(const Poly& f) {
    if (f.is_zero()) throw DomainError("strong_euler_check: zero polynomial");
    EulerReport rep;
    if (f.is_constant()) {
        rep.verdict = EulerVerdict::NotApplicable;
        return rep;
    }
    int n = f.nvars();
    if (f.is_homogeneous()) {
        rep.verdict = EulerVerdict::True;
        rep.weights = std::vector<Rational>(n, Rational(1, f.degree()));
        return rep;
    }
    // quasi-homogeneous solve: weights w with e . w = 1 for every exponent vector
    QMatrix m(static_cast<int>(f.terms().size()), n);
    std::vector<Rational> rhs(f.terms().size(), Rational(1));
    int row = 0;
    for (const auto& [e, c] : f.terms()) {
        for (int j = 0; j < n; ++j) m.at(row, j) = Rational(e[j]);
        ++row;
    }
    auto sol = m.solve(rhs);
    if (sol) {
        rep.verdict = EulerVerdict::True;
        rep.weights = std::move(*sol);
    } else {
        rep.verdict = EulerVerdict::Undecided;
    }
    return rep;
}

TameReport tame_check(const Poly& f, int max_k, bool generic_arrangement,
                      const GroebnerOptions& opts) {
    require_nonconstant(f, "tame_check");
    TameReport rep;
    int n = f.nvars();
    if (n <= 3) {
        rep.tame = true;
        rep.reason = "ambient dimension <= 3: automatically tame";
        return rep;
    }
    if (generic_arrangement) {
        rep.tame = true;
        rep.reason = "generic arrangement: tame";
        return rep;
    }
    if (!f.is_homogeneous())
        throw DomainError("tame_check: resolution path needs a homogeneous input");
    if (max_k < 0 || max_k > n) max_k = n;
    bool all_within = true;
    for (int k = 0; k <= max_k; ++k) {
        TameReport::PerK pk;
        pk.k = k;
        try {
            LogFormNumerators forms = log_k_forms(f, k, opts);
            Resolution res = graded_minimal_resolution(forms.module, k, opts);
            pk.proj_dim = res.proj_dim;
            pk.within = res.proj_dim.has_value();  // pd <= k iff it resolved within k steps
        } catch (const CapExceededError&) {
            pk.capped = true;
            pk.within = false;
            rep.partial = true;
        }
        all_within = all_within && pk.within;
        rep.per_k.push_back(pk);
    }
    rep.tame = all_within && !rep.partial;
    rep.reason = rep.partial ? "partial: degree cap reached"
                             : "graded resolutions of the log-form modules up to k = " +
                                   std::to_string(max_k);
    return rep;
}

std::string saito_holonomic_note(bool is_arrangement) {
    return is_arrangement ? "holds (hyperplane arrangement)" : "unknown (not decided)";
}

}  // namespace bsarr
