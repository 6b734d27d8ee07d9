#ifndef BSARR_ARRANGEMENT_HPP
#define BSARR_ARRANGEMENT_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsarr/poly.hpp"
#include "bsarr/qmatrix.hpp"

namespace bsarr {

// Central hyperplane arrangement: rational linear forms with multiplicities.
// Forms are stored as primitive integer vectors with positive first nonzero
// entry, so duplicates are detectable syntactically.
class Arrangement {
public:
    struct Entry {
        std::vector<mpz_class> coeffs;  // length n, normalized, nonzero
        int mult = 1;
    };

    Arrangement(int n, std::vector<std::vector<Rational>> forms, std::vector<int> mults,
                std::string label = "");

    int n() const { return n_; }
    const std::vector<Entry>& forms() const { return forms_; }
    const std::string& label() const { return label_; }

    // d = sum of multiplicities; each occurrence of a form has its own
    // expanded index in [0, d).
    int degree() const { return degree_; }
    bool is_reduced() const;

    // entry index of each expanded index
    const std::vector<int>& expanded_entry() const { return expanded_entry_; }
    // distinct normalized forms and the distinct index of each entry
    const std::vector<std::vector<mpz_class>>& distinct_forms() const { return distinct_; }
    const std::vector<int>& entry_distinct() const { return entry_distinct_; }
    // expanded indices carrying the given distinct form, ascending
    std::vector<int> expanded_of_distinct(int distinct_index) const;

    std::vector<Rational> form_rational(int distinct_index) const;

    // Product of the forms with multiplicities over the given variable names
    // (defaults: x,y,z,w for n <= 4, else x1..xn).
    Poly defining_polynomial(std::vector<std::string> vars = {}) const;
    static std::vector<std::string> default_vars(int n);

private:
    int n_;
    int degree_ = 0;
    std::vector<Entry> forms_;
    std::string label_;
    std::vector<int> expanded_entry_;
    std::vector<std::vector<mpz_class>> distinct_;
    std::vector<int> entry_distinct_;
};

// Partition of the expanded indices [0, d) into nonempty groups S_1..S_r.
struct Factorization {
    std::vector<std::vector<int>> groups;

    int r() const { return static_cast<int>(groups.size()); }
    void validate(int degree) const;  // StructuralError unless a partition of [0, d)
};

Factorization linear_factorization(const Arrangement& a);
Factorization trivial_factorization(const Arrangement& a);

struct LatticeEdge {
    std::vector<std::vector<mpz_class>> basis;  // rref basis of the annihilator span
    int rank = 0;                               // codimension of the edge
    std::vector<int> J;                         // expanded indices, ascending, maximal
    int d_X = 0;                                // |J| with multiplicity
    bool indecomposable = false;
};

struct Lattice {
    std::vector<LatticeEdge> edges;  // sorted by (rank, J); edges[0] is the ambient space
    // strict containments (i, j): edge i is a proper subspace of edge j
    std::vector<std::pair<int, int>> containments;
};

Lattice intersection_lattice(const Arrangement& a);

// Matroid connectivity of the forms through the edge, essentialized to rank
// r(X); equals the flag stored on lattice edges.
bool is_indecomposable(const LatticeEdge& e, const Arrangement& a);

// Connected components of the linear matroid on the given nonzero vectors;
// returns a component id per vector.
std::vector<int> matroid_components(const std::vector<std::vector<Rational>>& vectors);

// As above but with the fundamental-circuit graph built from a caller-chosen
// basis (basis must index an independent spanning subset). Exposed so tests
// can verify independence from the basis choice.
std::vector<int> matroid_components_with_basis(const std::vector<std::vector<Rational>>& vectors,
                                               const std::vector<int>& basis);

struct GenericityReport {
    bool independent = false;   // every n distinct forms linearly independent
    bool enough_forms = false;  // d > n
    bool applicable() const { return independent && enough_forms; }
};

// DomainError on non-reduced input, naming the offending duplicate.
GenericityReport is_generic(const Arrangement& a);

// Hyperplane-bijection-induced lattice isomorphism; both arrangements reduced.
bool lattice_isomorphic(const Arrangement& a, const Arrangement& b);

struct EdgeFactorizationProfile {
    int d_X = 0;
    std::vector<int> group_degrees;  // d_{X,k} = |J(X) ∩ S_k|
};

EdgeFactorizationProfile restrict_factorization(const LatticeEdge& e, const Factorization& f,
                                                int degree);

}  // namespace bsarr

#endif
