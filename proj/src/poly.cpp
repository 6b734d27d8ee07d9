#include "bsarr/poly.hpp"

#include <algorithm>
#include <sstream>

#include "bsarr/errors.hpp"

namespace bsarr {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool grlex_less(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // same degree: lexicographic with earlier variables more significant
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Poly Poly::constant(std::vector<std::string> vars, const Rational& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, int index) {
    if (index < 0 || index >= static_cast<int>(vars.size()))
        throw StructuralError("variable index out of range");
    Poly p(std::move(vars));
    Exponents e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponents exps, const Rational& c) {
    if (exps.size() != vars.size())
        throw StructuralError("exponent vector length does not match variable count");
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);
}

int Poly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Exponents& Poly::leading_exps() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw DomainError("leading term of zero polynomial");
    return terms_.begin()->second;
}

Rational Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size())
        throw StructuralError("exponent vector length does not match variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (vars_ != o.vars_)
        throw StructuralError("polynomials over different variable lists");
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_compatible(b);
    Poly r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::times_monomial(const Exponents& m, const Rational& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    Exponents e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + m[i];
        r.terms_.emplace(e, ca * c);
    }
    return r;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars()) throw StructuralError("derivative variable out of range");
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rational(e[var]));
    }
    return r;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return scaled(leading_coeff().reciprocal());
}

std::optional<Poly> Poly::try_divide_exact(const Poly& p, const Poly& q) {
    p.check_compatible(q);
    if (q.is_zero()) return std::nullopt;
    Poly rem = p;
    Poly quot(p.vars_);
    const Exponents& lq = q.leading_exps();
    Exponents m(p.vars_.size());
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exps();
        for (size_t i = 0; i < m.size(); ++i) {
            m[i] = lr[i] - lq[i];
            if (m[i] < 0) return std::nullopt;
        }
        Rational c = rem.leading_coeff() / q.leading_coeff();
        quot.add_term(m, c);
        rem -= q.times_monomial(m, c);
    }
    return quot;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_var = total_degree(e) > 0;
        if (!has_var || a != Rational(1)) {
            out << a.str();
            if (has_var) out << "*";
        }
        bool first_var = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_var) out << "*";
            first_var = false;
            out << vars_[i];
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {

// Coefficient of x_v^k in p, with the x_v exponent zeroed out.
Poly coeff_in_var(const Poly& p, int v, int k) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] != k) continue;
        Exponents d = e;
        d[v] = 0;
        r.add_term(d, c);
    }
    return r;
}

Poly leading_coeff_in_var(const Poly& p, int v) { return coeff_in_var(p, v, p.degree_in(v)); }

Poly shift_var(const Poly& p, int v, int k) {
    Poly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        d[v] += k;
        r.add_term(d, c);
    }
    return r;
}

Poly gcd_rec(const Poly& a, const Poly& b, int v);

// gcd of the x_v-coefficients of p; the result does not involve x_v.
Poly content_in_var(const Poly& p, int v) {
    Poly c = Poly::zero(p.vars());
    for (int k = 0; k <= p.degree_in(v); ++k) {
        Poly ck = coeff_in_var(p, v, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck : gcd_rec(c, ck, v - 1);
        if (c.is_constant()) break;
    }
    return c;
}

Poly exact_div_checked(const Poly& p, const Poly& q) {
    auto r = Poly::try_divide_exact(p, q);
    if (!r) throw DomainError("internal: expected exact polynomial division");
    return *r;
}

// Pseudo-remainder of a by b in the variable x_v (deg_v(a) >= deg_v(b) > 0 not required).
Poly pseudo_rem(Poly a, const Poly& b, int v) {
    int db = b.degree_in(v);
    Poly lb = leading_coeff_in_var(b, v);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        int k = a.degree_in(v) - db;
        Poly la = leading_coeff_in_var(a, v);
        a = a * lb - shift_var(la, v, k) * b;
    }
    return a;
}

Poly gcd_rec(const Poly& a, const Poly& b, int v) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (v < 0) return Poly::constant(a.vars(), Rational(1));
    int da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 && db == 0) return gcd_rec(a, b, v - 1);
    if (da == 0) return gcd_rec(a, content_in_var(b, v), v - 1);
    if (db == 0) return gcd_rec(content_in_var(a, v), b, v - 1);

    Poly ca = content_in_var(a, v), cb = content_in_var(b, v);
    Poly c = gcd_rec(ca, cb, v - 1);
    Poly A = exact_div_checked(a, ca), B = exact_div_checked(b, cb);
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    while (!B.is_zero()) {
        Poly R = pseudo_rem(A, B, v);
        if (!R.is_zero()) R = exact_div_checked(R, content_in_var(R, v));
        A = B;
        B = R;
    }
    return c * A;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (!a.same_vars(b)) throw StructuralError("gcd of polynomials over different variable lists");
    Poly g = gcd_rec(a, b, a.nvars() - 1);
    return g.monic();
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    Poly g = p;
    for (int i = 0; i < p.nvars(); ++i) {
        Poly d = p.derivative(i);
        if (d.is_zero()) continue;
        g = poly_gcd(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return p.monic();
    auto q = Poly::try_divide_exact(p, g);
    if (!q) throw DomainError("internal: gcd does not divide its argument");
    return q->monic();
}

}  // namespace bsarr
