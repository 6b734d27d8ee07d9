#ifndef BSARR_POLY_HPP
#define BSARR_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsarr/rational.hpp"

namespace bsarr {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic: higher total degree wins, ties broken lexicographically
// in the declared variable order.
bool grlex_less(const Exponents& a, const Exponents& b);

struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_less(b, a); }
};

// Sparse multivariate polynomial over Q with a fixed, ordered variable list.
// Terms are kept grlex-descending, so begin() is the leading term; no zero
// coefficients are stored.
class Poly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }
    static Poly constant(std::vector<std::string> vars, const Rational& c);
    static Poly variable(std::vector<std::string> vars, int index);
    static Poly monomial(std::vector<std::string> vars, Exponents exps, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t num_terms() const { return terms_.size(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const;
    int degree_in(int var) const;

    const Exponents& leading_exps() const;
    const Rational& leading_coeff() const;
    Rational coeff(const Exponents& e) const;

    void add_term(const Exponents& e, const Rational& c);

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Exponents& e, const Rational& c) const;

    Poly derivative(int var) const;

    // Homogeneous w.r.t. total degree (the zero polynomial counts as homogeneous).
    bool is_homogeneous() const;

    Poly monic() const;

    // Exact quotient p/q, or nullopt when q does not divide p.
    static std::optional<Poly> try_divide_exact(const Poly& p, const Poly& q);

    bool same_vars(const Poly& o) const { return vars_ == o.vars_; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str() const;

private:
    void check_compatible(const Poly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

// GCD via primitive pseudo-remainder sequences recursing on variables;
// result is monic under grlex. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

// Product of the distinct irreducible factors of p, monic under grlex.
// Throws DomainError for p = 0.
Poly squarefree_part(const Poly& p);

}  // namespace bsarr

#endif
