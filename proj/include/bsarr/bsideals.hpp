#ifndef BSARR_BSIDEALS_HPP
#define BSARR_BSIDEALS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsarr/arrangement.hpp"
#include "bsarr/rational.hpp"

namespace bsarr {

// Affine hyperplane sum(coeffs_k s_k) + constant = 0 in s-space, stored as the
// primitive integer representative with positive first nonzero coefficient.
struct SHyperplane {
    std::vector<mpz_class> coeffs;
    mpz_class constant;

    SHyperplane() = default;
    SHyperplane(std::vector<Rational> coefficients, Rational constant_term);
    SHyperplane(std::vector<mpz_class> coefficients, mpz_class constant_term);

    std::string str(const std::string& var = "s") const;

    friend bool operator==(const SHyperplane& a, const SHyperplane& b) {
        return a.coeffs == b.coeffs && a.constant == b.constant;
    }
    friend bool operator<(const SHyperplane& a, const SHyperplane& b);
};

// Finite union of rational affine hyperplanes in C^r.
struct BSLocus {
    int r = 0;
    std::vector<SHyperplane> hyperplanes;  // sorted, no duplicates
    bool entire_space = false;             // a pullback degenerated to 0 = 0
    std::vector<std::string> warnings;

    void insert(SHyperplane h);
    bool contains(const SHyperplane& h) const;
    bool subset_of(const BSLocus& other) const;
    bool same_hyperplanes(const BSLocus& other) const;
};

// Product of linear s-polynomials with multiplicities; factors pairwise distinct.
struct BSProduct {
    int r = 0;
    std::vector<std::pair<SHyperplane, int>> factors;  // sorted by hyperplane
    std::vector<std::string> flags;

    void add_factor(SHyperplane h, int mult);
    int multiplicity(const SHyperplane& h) const;
    int degree() const;
    BSLocus radical_locus() const;
    // factor-multiset divisibility
    bool divides(const BSProduct& other) const;
    std::string str() const;
};

// Partition of [r] used to pass to a coarser factorization (blocks I_t).
struct CoarseningMap {
    std::vector<std::vector<int>> blocks;
    int m() const { return static_cast<int>(blocks.size()); }
    void validate(int r) const;
};

// Lower bound for Z(B_{F,0}^1): hyperplanes sum d_{X,k} s_k + r(X) + l over
// indecomposable edges X, 0 <= l <= d_X - 1. Requires a reduced (central)
// arrangement; unverified tameness is reported as a warning annotation.
BSLocus lower_locus(const Arrangement& a, const Factorization& f);

// Upper bound: same hyperplane family with 0 <= l <= ceil(T_X - 1),
// T_X = 2 d_X - d_X/d - r(X).
BSLocus upper_locus(const Arrangement& a, const Factorization& f);

struct GenericIdealResult {
    std::optional<BSProduct> product;  // factorization into linear forms
    std::optional<BSLocus> locus;      // any other factorization
    std::vector<std::string> flags;    // "principal"; plus "reduced" for linear
};

// Bernstein-Sato ideal data of a generic arrangement (d > n): the principal
// generator for a factorization into linear forms, the zero locus otherwise.
GenericIdealResult generic_ideal(const Arrangement& a, const Factorization& f);

// (s+1)^(n-1) * prod_{i=0}^{2d-n-2} (s + (i+n)/d), as a univariate product.
BSProduct walther_bfunction(int n, int d);

// prod over indecomposable X of prod_{l=0}^{N} (sum_{j in J(X)} s_j + r(X) + l);
// F must be a factorization into linear forms, N >= 0 caller-supplied.
BSProduct maisonobe_element(const Arrangement& a, const Factorization& f, int N);

Factorization coarsen(const Factorization& f, const CoarseningMap& c);

// Pullback along Delta_H: each hyperplane sum c_k s_k + e maps to
// sum_t (sum_{k in I_t} c_k) a_t + e; degenerate pullbacks set flags.
BSLocus pullback_locus(const BSLocus& locus, const CoarseningMap& c);

struct DiagonalRoots {
    std::vector<Rational> roots;  // sorted ascending, unique
    bool entire_diagonal = false;
};

DiagonalRoots diagonal_roots(const BSLocus& locus);

// Every root strictly inside (-2 + 1/d, 0).
bool saito_interval_check(const std::vector<Rational>& roots, int d);

}  // namespace bsarr

#endif
