#include "bsarr/bsideals.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bsarr/errors.hpp"

namespace bsarr {

namespace {

void normalize_affine(std::vector<mpz_class>& coeffs, mpz_class& constant) {
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (c != 0) all_zero = false;
    if (all_zero) throw StructuralError("s-hyperplane with zero coefficient vector");
    mpz_class g = constant;
    if (g < 0) g = -g;
    for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    int lead = 0;
    for (const auto& c : coeffs) {
        if (c != 0) {
            lead = sgn(c);
            break;
        }
    }
    if (lead < 0) g = -g;
    for (auto& c : coeffs) c /= g;
    constant /= g;
}

}  // namespace

SHyperplane::SHyperplane(std::vector<mpz_class> coefficients, mpz_class constant_term)
    : coeffs(std::move(coefficients)), constant(std::move(constant_term)) {
    normalize_affine(coeffs, constant);
}

SHyperplane::SHyperplane(std::vector<Rational> coefficients, Rational constant_term) {
    std::vector<Rational> all = coefficients;
    all.push_back(constant_term);
    std::vector<mpz_class> ints = clear_denominators(all);
    constant = ints.back();
    ints.pop_back();
    coeffs = std::move(ints);
    normalize_affine(coeffs, constant);
}

bool operator<(const SHyperplane& a, const SHyperplane& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        int c = cmp(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c < 0;
    }
    return cmp(a.constant, b.constant) < 0;
}

std::string SHyperplane::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    bool single = coeffs.size() == 1;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        mpz_class c = coeffs[k];
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        mpz_class a = abs(c);
        if (a != 1) out << a.get_str() << "*";
        out << var;
        if (!single) out << "_" << (k + 1);
    }
    if (constant != 0) {
        out << (constant < 0 ? " - " : " + ");
        mpz_class a = abs(constant);
        out << a.get_str();
    }
    return out.str();
}

void BSLocus::insert(SHyperplane h) {
    auto it = std::lower_bound(hyperplanes.begin(), hyperplanes.end(), h);
    if (it != hyperplanes.end() && *it == h) return;
    hyperplanes.insert(it, std::move(h));
}

bool BSLocus::contains(const SHyperplane& h) const {
    return std::binary_search(hyperplanes.begin(), hyperplanes.end(), h);
}

bool BSLocus::subset_of(const BSLocus& other) const {
    for (const auto& h : hyperplanes)
        if (!other.contains(h)) return false;
    return true;
}

bool BSLocus::same_hyperplanes(const BSLocus& other) const {
    return hyperplanes == other.hyperplanes;
}

void BSProduct::add_factor(SHyperplane h, int mult) {
    if (mult <= 0) throw StructuralError("factor multiplicity must be positive");
    auto it = std::lower_bound(
        factors.begin(), factors.end(), h,
        [](const std::pair<SHyperplane, int>& f, const SHyperplane& key) { return f.first < key; });
    if (it != factors.end() && it->first == h)
        it->second += mult;
    else
        factors.insert(it, {std::move(h), mult});
}

int BSProduct::multiplicity(const SHyperplane& h) const {
    for (const auto& [f, m] : factors)
        if (f == h) return m;
    return 0;
}

int BSProduct::degree() const {
    int d = 0;
    for (const auto& [f, m] : factors) d += m;
    return d;
}

BSLocus BSProduct::radical_locus() const {
    BSLocus l;
    l.r = r;
    for (const auto& [f, m] : factors) l.insert(f);
    return l;
}

bool BSProduct::divides(const BSProduct& other) const {
    for (const auto& [f, m] : factors)
        if (other.multiplicity(f) < m) return false;
    return true;
}

std::string BSProduct::str() const {
    std::ostringstream out;
    for (const auto& [f, m] : factors) {
        out << "(" << f.str() << ")";
        if (m > 1) out << "^" << m;
    }
    return out.str();
}

void CoarseningMap::validate(int r) const {
    std::vector<int> seen(r, 0);
    if (blocks.empty()) throw StructuralError("coarsening map needs at least one block");
    for (const auto& b : blocks) {
        if (b.empty()) throw StructuralError("coarsening block is empty");
        for (int i : b) {
            if (i < 0 || i >= r)
                throw StructuralError("coarsening index " + std::to_string(i) +
                                      " out of range [0, " + std::to_string(r) + ")");
            if (seen[i]++)
                throw StructuralError("coarsening index " + std::to_string(i) + " repeated");
        }
    }
    for (int i = 0; i < r; ++i)
        if (!seen[i]) throw StructuralError("coarsening misses index " + std::to_string(i));
}

namespace {

void require_reduced(const Arrangement& a, const char* op) {
    if (!a.is_reduced())
        throw DomainError(std::string(op) + " requires a reduced arrangement");
}

std::vector<std::string> tameness_warnings(const Arrangement& a) {
    std::vector<std::string> w;
    if (a.n() <= 3) return w;  // automatically tame in ambient dimension <= 3
    GenericityReport rep = is_generic(a);
    if (rep.applicable()) return w;  // generic arrangements are tame
    w.push_back("tameness not verified (n >= 4 and not generic); Z(B) bounds assume tame");
    return w;
}

// bound hyperplanes over indecomposable edges with l in [0, lmax(edge)]
BSLocus bound_locus(const Arrangement& a, const Factorization& f, bool upper) {
    require_reduced(a, upper ? "upper_locus" : "lower_locus");
    f.validate(a.degree());
    BSLocus locus;
    locus.r = f.r();
    locus.warnings = tameness_warnings(a);
    Lattice lat = intersection_lattice(a);
    int d = a.degree();
    if (upper && d == 1)
        locus.warnings.push_back(
            "upper bound degenerates for d = 1: the Saito interval (-2 + 1/d, 0) excludes -1");
    for (const auto& e : lat.edges) {
        if (e.rank == 0 || !e.indecomposable) continue;
        auto prof = restrict_factorization(e, f, d);
        std::vector<mpz_class> coeffs;
        for (int dk : prof.group_degrees) coeffs.emplace_back(dk);
        mpz_class lmax;
        if (upper) {
            // ceil(T_X - 1) with T_X = 2 d_X - d_X/d - r(X), computed exactly
            mpz_class num = mpz_class(2 * e.d_X - e.rank - 1) * d - e.d_X;
            mpz_cdiv_q(lmax.get_mpz_t(), num.get_mpz_t(), mpz_class(d).get_mpz_t());
        } else {
            lmax = e.d_X - 1;
        }
        for (mpz_class l = 0; l <= lmax; ++l)
            locus.insert(SHyperplane(coeffs, mpz_class(e.rank) + l));
    }
    return locus;
}

bool is_linear_factorization(const Factorization& f) {
    for (const auto& g : f.groups)
        if (g.size() != 1) return false;
    return true;
}

}  // namespace

BSLocus lower_locus(const Arrangement& a, const Factorization& f) {
    return bound_locus(a, f, false);
}

BSLocus upper_locus(const Arrangement& a, const Factorization& f) {
    return bound_locus(a, f, true);
}

GenericIdealResult generic_ideal(const Arrangement& a, const Factorization& f) {
    GenericityReport rep = is_generic(a);  // throws DomainError when non-reduced
    int n = a.n(), d = a.degree();
    if (!rep.applicable())
        throw DomainError(rep.enough_forms
                              ? "generic_ideal requires a generic arrangement"
                              : "generic_ideal requires d > n (d = " + std::to_string(d) +
                                    ", n = " + std::to_string(n) + ")");
    f.validate(d);
    GenericIdealResult out;
    out.flags.push_back("principal");
    int r = f.r();
    if (is_linear_factorization(f)) {
        out.flags.push_back("reduced");
        BSProduct prod;
        prod.r = r;
        prod.flags = out.flags;
        for (int k = 0; k < r; ++k) {
            std::vector<mpz_class> c(r, 0);
            c[k] = 1;
            prod.add_factor(SHyperplane(std::move(c), mpz_class(1)), 1);
        }
        for (int i = 0; i + n <= 2 * d - 2; ++i) {
            std::vector<mpz_class> c(r, 1);
            prod.add_factor(SHyperplane(std::move(c), mpz_class(i + n)), 1);
        }
        out.product = std::move(prod);
    } else {
        BSLocus locus;
        locus.r = r;
        for (int k = 0; k < r; ++k) {
            std::vector<mpz_class> c(r, 0);
            c[k] = 1;
            locus.insert(SHyperplane(std::move(c), mpz_class(1)));
        }
        for (int i = 0; i + n <= 2 * d - 2; ++i) {
            std::vector<mpz_class> c;
            for (const auto& g : f.groups) c.emplace_back(g.size());
            locus.insert(SHyperplane(std::move(c), mpz_class(i + n)));
        }
        out.locus = std::move(locus);
    }
    return out;
}

BSProduct walther_bfunction(int n, int d) {
    if (n < 1 || d <= n)
        throw DomainError("walther_bfunction requires d > n >= 1 (got n = " + std::to_string(n) +
                          ", d = " + std::to_string(d) + ")");
    BSProduct prod;
    prod.r = 1;
    if (n > 1) prod.add_factor(SHyperplane({mpz_class(1)}, mpz_class(1)), n - 1);
    for (int i = 0; i <= 2 * d - n - 2; ++i)
        prod.add_factor(SHyperplane({mpz_class(d)}, mpz_class(i + n)), 1);
    return prod;
}

BSProduct maisonobe_element(const Arrangement& a, const Factorization& f, int N) {
    if (N < 0) throw StructuralError("maisonobe_element requires N >= 0");
    f.validate(a.degree());
    if (!is_linear_factorization(f))
        throw DomainError("maisonobe_element requires a factorization into linear forms");
    int d = a.degree();
    // group index of each expanded index (groups are singletons)
    std::vector<int> group_of(d);
    for (int k = 0; k < f.r(); ++k) group_of[f.groups[k][0]] = k;

    BSProduct prod;
    prod.r = f.r();
    Lattice lat = intersection_lattice(a);
    for (const auto& e : lat.edges) {
        if (e.rank == 0 || !e.indecomposable) continue;
        std::vector<mpz_class> c(f.r(), 0);
        for (int j : e.J) c[group_of[j]] += 1;
        for (int l = 0; l <= N; ++l)
            prod.add_factor(SHyperplane(c, mpz_class(e.rank + l)), 1);
    }
    return prod;
}

Factorization coarsen(const Factorization& f, const CoarseningMap& c) {
    c.validate(f.r());
    Factorization h;
    for (const auto& block : c.blocks) {
        std::vector<int> merged;
        for (int k : block) merged.insert(merged.end(), f.groups[k].begin(), f.groups[k].end());
        std::sort(merged.begin(), merged.end());
        h.groups.push_back(std::move(merged));
    }
    return h;
}

BSLocus pullback_locus(const BSLocus& locus, const CoarseningMap& c) {
    if (locus.r <= 0) throw StructuralError("locus has no s-variables");
    c.validate(locus.r);
    BSLocus out;
    out.r = c.m();
    out.warnings = locus.warnings;
    out.entire_space = locus.entire_space;
    for (const auto& h : locus.hyperplanes) {
        std::vector<mpz_class> b(c.m(), 0);
        bool all_zero = true;
        for (int t = 0; t < c.m(); ++t) {
            for (int k : c.blocks[t]) b[t] += h.coeffs[k];
            if (b[t] != 0) all_zero = false;
        }
        if (all_zero) {
            if (h.constant == 0) out.entire_space = true;
            continue;  // constant != 0: empty pullback, dropped
        }
        out.insert(SHyperplane(std::move(b), h.constant));
    }
    return out;
}

DiagonalRoots diagonal_roots(const BSLocus& locus) {
    DiagonalRoots out;
    out.entire_diagonal = locus.entire_space;
    std::set<Rational> roots;
    for (const auto& h : locus.hyperplanes) {
        mpz_class s = 0;
        for (const auto& c : h.coeffs) s += c;
        if (s == 0) {
            if (h.constant == 0) out.entire_diagonal = true;
            continue;
        }
        roots.insert(Rational(-h.constant, s));
    }
    out.roots.assign(roots.begin(), roots.end());
    return out;
}

bool saito_interval_check(const std::vector<Rational>& roots, int d) {
    if (d < 1) throw DomainError("saito_interval_check requires d >= 1");
    Rational low = Rational(-2) + Rational(1, d);
    for (const auto& rho : roots)
        if (!(low < rho && rho < Rational(0))) return false;
    return true;
}

}  // namespace bsarr
