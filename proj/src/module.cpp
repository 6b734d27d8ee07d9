#include "bsarr/module.hpp"

#include <sstream>

#include "bsarr/errors.hpp"

namespace bsarr {

VecPoly::VecPoly(std::vector<std::string> vars, int rank) : vars_(std::move(vars)) {
    if (rank <= 0) throw StructuralError("module rank must be positive");
    comps_.assign(rank, Poly(vars_));
}

VecPoly::VecPoly(std::vector<Poly> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw StructuralError("module element needs at least one component");
    vars_ = comps_[0].vars();
    for (const auto& p : comps_)
        if (p.vars() != vars_) throw StructuralError("mixed variable lists in module element");
}

bool VecPoly::is_zero() const {
    for (const auto& p : comps_)
        if (!p.is_zero()) return false;
    return true;
}

int VecPoly::degree() const {
    int d = -1;
    for (const auto& p : comps_) d = std::max(d, p.degree());
    return d;
}

VecPoly VecPoly::operator-() const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = -p;
    return r;
}

VecPoly& VecPoly::operator+=(const VecPoly& o) {
    if (rank() != o.rank()) throw StructuralError("module rank mismatch");
    for (int i = 0; i < rank(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

VecPoly& VecPoly::operator-=(const VecPoly& o) {
    if (rank() != o.rank()) throw StructuralError("module rank mismatch");
    for (int i = 0; i < rank(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

VecPoly VecPoly::scaled(const Rational& c) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
}

VecPoly VecPoly::times_monomial(const Exponents& e, const Rational& c) const {
    VecPoly r = *this;
    for (auto& p : r.comps_) p = p.times_monomial(e, c);
    return r;
}

VecPoly VecPoly::times(const Poly& p) const {
    VecPoly r = *this;
    for (auto& q : r.comps_) q = q * p;
    return r;
}

std::string VecPoly::str() const {
    std::ostringstream out;
    out << "(";
    for (int i = 0; i < rank(); ++i) {
        if (i) out << ", ";
        out << comps_[i].str();
    }
    out << ")";
    return out.str();
}

ModuleTerm leading_term(const VecPoly& v, const ModuleOrder& order) {
    ModuleTerm best;
    for (int i = 0; i < v.rank(); ++i) {
        if (v[i].is_zero()) continue;
        const Exponents& e = v[i].leading_exps();
        if (best.pos < 0 || order.less(best.pos, best.exps, i, e)) {
            best.pos = i;
            best.exps = e;
            best.coeff = v[i].leading_coeff();
        }
    }
    return best;
}

PolyModule PolyModule::ideal(std::vector<Poly> gens) {
    PolyModule m;
    m.ambient_rank = 1;
    if (gens.empty()) throw StructuralError("ideal needs at least one generator");
    m.vars = gens[0].vars();
    for (auto& g : gens) m.generators.emplace_back(std::vector<Poly>{std::move(g)});
    m.validate();
    return m;
}

void PolyModule::validate() const {
    if (ambient_rank <= 0) throw StructuralError("ambient rank must be positive");
    if (shifts && static_cast<int>(shifts->size()) != ambient_rank)
        throw StructuralError("shift vector length does not match ambient rank");
    for (const auto& g : generators) {
        if (g.rank() != ambient_rank) throw StructuralError("generator rank mismatch");
        if (g.vars() != vars) throw StructuralError("generator over wrong variable list");
    }
}

std::optional<int> homogeneous_degree(const VecPoly& v, const std::vector<int>& shifts) {
    std::optional<int> deg;
    for (int i = 0; i < v.rank(); ++i) {
        for (const auto& [e, c] : v[i].terms()) {
            int d = total_degree(e) + shifts[i];
            if (!deg)
                deg = d;
            else if (*deg != d)
                return std::nullopt;
        }
    }
    return deg;
}

}  // namespace bsarr
