#include "bsarr/groebner.hpp"

#include <algorithm>
#include <cstdlib>

#include "bsarr/errors.hpp"

namespace bsarr {

GroebnerOptions::GroebnerOptions() : degree_cap(30) {
    if (const char* env = std::getenv("BSARR_DEGREE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) degree_cap = v;
    }
}

namespace {

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

struct Pair {
    int i, j;
    Exponents lcm;
};

// Full normal form of v against basis (elements monic, deterministic scan order).
VecPoly reduce_full(VecPoly v, const std::vector<VecPoly>& basis,
                    const std::vector<ModuleTerm>& lts, const ModuleOrder& order) {
    VecPoly remainder(v.vars(), v.rank());
    while (!v.is_zero()) {
        ModuleTerm lt = leading_term(v, order);
        bool reduced = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (lts[k].pos != lt.pos || !divides(lts[k].exps, lt.exps)) continue;
            v -= basis[k].times_monomial(exp_sub(lt.exps, lts[k].exps), lt.coeff);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder[lt.pos].add_term(lt.exps, lt.coeff);
            v[lt.pos].add_term(lt.exps, -lt.coeff);
        }
    }
    return remainder;
}

VecPoly spoly(const VecPoly& a, const ModuleTerm& la, const VecPoly& b, const ModuleTerm& lb) {
    Exponents l = exp_lcm(la.exps, lb.exps);
    return a.times_monomial(exp_sub(l, la.exps), Rational(1)) -
           b.times_monomial(exp_sub(l, lb.exps), Rational(1));
}

void check_cap(const VecPoly& v, const GroebnerOptions& opts) {
    int d = v.degree();
    if (d > opts.degree_cap) throw CapExceededError(d, opts.degree_cap);
}

}  // namespace

GroebnerBasis buchberger(const PolyModule& m, ModuleOrder order, const GroebnerOptions& opts) {
    m.validate();
    GroebnerBasis gb(m.vars, m.ambient_rank, order);
    std::vector<VecPoly> basis;
    std::vector<ModuleTerm> lts;

    auto push = [&](VecPoly v) {
        check_cap(v, opts);
        ModuleTerm lt = leading_term(v, order);
        v = v.scaled(lt.coeff.reciprocal());
        lt.coeff = Rational(1);
        basis.push_back(std::move(v));
        lts.push_back(std::move(lt));
    };

    for (const auto& g : m.generators) {
        if (g.is_zero()) continue;
        push(g);
    }

    std::vector<Pair> pairs;
    auto add_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (lts[i].pos != lts[j].pos) continue;
            if (m.ambient_rank == 1 && coprime(lts[i].exps, lts[j].exps)) continue;
            pairs.push_back({i, j, exp_lcm(lts[i].exps, lts[j].exps)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs_for(static_cast<int>(j));

    while (!pairs.empty()) {
        // normal strategy: smallest lcm degree, then grlex, then indices
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            int da = total_degree(a.lcm), db = total_degree(b.lcm);
            bool better;
            if (da != db)
                better = da < db;
            else if (a.lcm != b.lcm)
                better = grlex_less(a.lcm, b.lcm);
            else
                better = std::tie(a.i, a.j) < std::tie(b.i, b.j);
            if (better) best = k;
        }
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        VecPoly s = spoly(basis[p.i], lts[p.i], basis[p.j], lts[p.j]);
        VecPoly h = reduce_full(std::move(s), basis, lts, order);
        if (h.is_zero()) continue;
        push(std::move(h));
        add_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // auto-reduction: every element fully reduced against the others
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k < basis.size(); ++k) {
            VecPoly self = basis[k];
            std::vector<VecPoly> others;
            std::vector<ModuleTerm> other_lts;
            for (size_t t = 0; t < basis.size(); ++t) {
                if (t == k) continue;
                others.push_back(basis[t]);
                other_lts.push_back(lts[t]);
            }
            VecPoly r = reduce_full(self, others, other_lts, order);
            if (r.is_zero()) {
                basis.erase(basis.begin() + static_cast<long>(k));
                lts.erase(lts.begin() + static_cast<long>(k));
                changed = true;
                break;
            }
            ModuleTerm lt = leading_term(r, order);
            r = r.scaled(lt.coeff.reciprocal());
            lt.coeff = Rational(1);
            if (!(r == basis[k])) {
                basis[k] = std::move(r);
                lts[k] = std::move(lt);
                changed = true;
            }
        }
    }

    std::vector<size_t> idx(basis.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        return order.less(lts[a].pos, lts[a].exps, lts[b].pos, lts[b].exps);
    });
    for (size_t i : idx) gb.elements_.push_back(basis[i]);
    return gb;
}

VecPoly GroebnerBasis::normal_form(VecPoly v) const {
    if (v.rank() != rank_) throw StructuralError("normal form: rank mismatch");
    if (v.vars() != vars_) throw StructuralError("normal form: variable list mismatch");
    std::vector<ModuleTerm> lts;
    lts.reserve(elements_.size());
    for (const auto& e : elements_) lts.push_back(leading_term(e, order_));
    return reduce_full(std::move(v), elements_, lts, order_);
}

bool GroebnerBasis::contains(const VecPoly& v) const { return normal_form(v).is_zero(); }

bool GroebnerBasis::spairs_reduce_to_zero() const {
    std::vector<ModuleTerm> lts;
    for (const auto& e : elements_) lts.push_back(leading_term(e, order_));
    for (size_t i = 0; i < elements_.size(); ++i) {
        for (size_t j = i + 1; j < elements_.size(); ++j) {
            if (lts[i].pos != lts[j].pos) continue;
            VecPoly s = spoly(elements_[i], lts[i], elements_[j], lts[j]);
            if (!reduce_full(std::move(s), elements_, lts, order_).is_zero()) return false;
        }
    }
    return true;
}

bool membership(const VecPoly& v, const PolyModule& m, const GroebnerOptions& opts) {
    if (v.rank() != m.ambient_rank) throw StructuralError("membership: rank mismatch");
    return buchberger(m, {}, opts).contains(v);
}

bool membership(const Poly& p, const PolyModule& m, const GroebnerOptions& opts) {
    return membership(VecPoly(std::vector<Poly>{p}), m, opts);
}

bool module_equal(const PolyModule& a, const PolyModule& b, const GroebnerOptions& opts) {
    if (a.ambient_rank != b.ambient_rank) throw StructuralError("module_equal: rank mismatch");
    if (a.vars != b.vars) throw StructuralError("module_equal: variable list mismatch");
    GroebnerBasis ga = buchberger(a, {}, opts), gbb = buchberger(b, {}, opts);
    for (const auto& g : a.generators)
        if (!gbb.contains(g)) return false;
    for (const auto& g : b.generators)
        if (!ga.contains(g)) return false;
    return true;
}

PolyModule syzygies(const PolyModule& m, const GroebnerOptions& opts) {
    m.validate();
    if (m.generators.empty()) throw StructuralError("syzygies of an empty generating set");
    int amb = m.ambient_rank;
    int t = static_cast<int>(m.generators.size());

    PolyModule ext;
    ext.vars = m.vars;
    ext.ambient_rank = amb + t;
    for (int i = 0; i < t; ++i) {
        VecPoly v(m.vars, amb + t);
        for (int c = 0; c < amb; ++c) v[c] = m.generators[i][c];
        v[amb + i] = Poly::constant(m.vars, Rational(1));
        ext.generators.push_back(std::move(v));
    }

    ModuleOrder order;
    order.senior_block = amb;
    GroebnerBasis gb = buchberger(ext, order, opts);

    PolyModule syz;
    syz.vars = m.vars;
    syz.ambient_rank = t;
    for (const auto& e : gb.elements()) {
        bool head_zero = true;
        for (int c = 0; c < amb; ++c)
            if (!e[c].is_zero()) {
                head_zero = false;
                break;
            }
        if (!head_zero) continue;
        VecPoly s(m.vars, t);
        for (int c = 0; c < t; ++c) s[c] = e[amb + c];
        if (!s.is_zero()) syz.generators.push_back(std::move(s));
    }

    // Schreyer shifts when the input is graded with homogeneous generators.
    if (m.shifts) {
        std::vector<int> shifts;
        bool graded = true;
        for (const auto& g : m.generators) {
            if (g.is_zero()) {
                shifts.push_back(0);
                continue;
            }
            auto d = homogeneous_degree(g, *m.shifts);
            if (!d) {
                graded = false;
                break;
            }
            shifts.push_back(*d);
        }
        if (graded) syz.shifts = std::move(shifts);
    }
    return syz;
}

}  // namespace bsarr
