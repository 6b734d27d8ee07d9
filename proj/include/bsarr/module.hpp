#ifndef BSARR_MODULE_HPP
#define BSARR_MODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsarr/poly.hpp"

namespace bsarr {

// Element of a free module R^rank over the polynomial ring.
class VecPoly {
public:
    VecPoly() = default;
    VecPoly(std::vector<std::string> vars, int rank);
    explicit VecPoly(std::vector<Poly> comps);

    int rank() const { return static_cast<int>(comps_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    const Poly& operator[](int i) const { return comps_[i]; }
    Poly& operator[](int i) { return comps_[i]; }
    const std::vector<Poly>& comps() const { return comps_; }

    bool is_zero() const;
    // Max total degree over components; -1 when zero.
    int degree() const;

    VecPoly operator-() const;
    VecPoly& operator+=(const VecPoly& o);
    VecPoly& operator-=(const VecPoly& o);
    friend VecPoly operator+(VecPoly a, const VecPoly& b) { return a += b; }
    friend VecPoly operator-(VecPoly a, const VecPoly& b) { return a -= b; }
    VecPoly scaled(const Rational& c) const;
    VecPoly times_monomial(const Exponents& e, const Rational& c) const;
    VecPoly times(const Poly& p) const;

    friend bool operator==(const VecPoly& a, const VecPoly& b) {
        return a.comps_ == b.comps_;
    }

    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::vector<Poly> comps_;
};

// Term-over-position order extending grlex, with an optional senior block:
// any term in a position < senior_block beats any term in a position >=
// senior_block (used to eliminate the original components when computing
// syzygies through tags).
struct ModuleOrder {
    int senior_block = 0;

    // true iff (p1,e1) < (p2,e2)
    bool less(int p1, const Exponents& e1, int p2, const Exponents& e2) const {
        if (senior_block > 0) {
            bool s1 = p1 < senior_block, s2 = p2 < senior_block;
            if (s1 != s2) return s2;
        }
        if (e1 != e2) return grlex_less(e1, e2);
        return p1 > p2;
    }
};

struct ModuleTerm {
    int pos = -1;
    Exponents exps;
    Rational coeff;
};

// Leading term of v under the given order; pos = -1 when v = 0.
ModuleTerm leading_term(const VecPoly& v, const ModuleOrder& order);

// Finitely generated submodule of R^ambient_rank, given by generators.
// `shifts`, when present, assigns a degree to each ambient basis vector so
// that deg(x^a e_i) = |a| + shifts[i].
struct PolyModule {
    std::vector<std::string> vars;
    int ambient_rank = 1;
    std::vector<VecPoly> generators;
    std::optional<std::vector<int>> shifts;

    static PolyModule ideal(std::vector<Poly> gens);
    void validate() const;  // StructuralError on rank/vars mismatch
};

// Degree of a homogeneous element w.r.t. shifts; nullopt when not homogeneous
// (or zero).
std::optional<int> homogeneous_degree(const VecPoly& v, const std::vector<int>& shifts);

}  // namespace bsarr

#endif
