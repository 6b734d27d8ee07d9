#include "bsarr/rational.hpp"

#include <cctype>

#include "bsarr/errors.hpp"

namespace bsarr {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n) / mpq_class(d);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::parse(const std::string& s) {
    auto bad = [&]() -> StructuralError {
        return StructuralError("malformed rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto check_int = [&](const std::string& t) {
        if (t.empty()) throw bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw bad();
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) throw bad();
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        check_int(s);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw bad();
    return Rational(mpz_class(num), d);
}

void normalize_primitive(std::vector<mpz_class>& v) {
    mpz_class g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;  // zero vector stays zero
    int lead_sign = 0;
    for (const auto& x : v) {
        if (x != 0) {
            lead_sign = sgn(x);
            break;
        }
    }
    if (lead_sign < 0) g = -g;
    for (auto& x : v) x /= g;
}

std::vector<mpz_class> clear_denominators(const std::vector<Rational>& v) {
    mpz_class lcm = 1;
    for (const auto& r : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.denominator().get_mpz_t());
    std::vector<mpz_class> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(r.numerator() * (lcm / r.denominator()));
    normalize_primitive(out);
    return out;
}

}  // namespace bsarr
