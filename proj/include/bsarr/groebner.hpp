#ifndef BSARR_GROEBNER_HPP
#define BSARR_GROEBNER_HPP

#include <vector>

#include "bsarr/module.hpp"

namespace bsarr {

struct GroebnerOptions {
    int degree_cap;
    GroebnerOptions();  // default 30, overridable via BSARR_DEGREE_CAP
};

// Auto-reduced Groebner basis of a submodule of a free module. Elements are
// monic and sorted by leading term, so equal modules with equal orders yield
// identical bases.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<std::string> vars, int rank, ModuleOrder order)
        : vars_(std::move(vars)), rank_(rank), order_(order) {}

    const std::vector<VecPoly>& elements() const { return elements_; }
    const ModuleOrder& order() const { return order_; }
    int rank() const { return rank_; }
    const std::vector<std::string>& vars() const { return vars_; }

    VecPoly normal_form(VecPoly v) const;
    bool contains(const VecPoly& v) const;

    // Self-certification: every S-pair reduces to zero.
    bool spairs_reduce_to_zero() const;

private:
    friend GroebnerBasis buchberger(const PolyModule&, ModuleOrder, const GroebnerOptions&);

    std::vector<std::string> vars_;
    int rank_;
    ModuleOrder order_;
    std::vector<VecPoly> elements_;
};

GroebnerBasis buchberger(const PolyModule& m, ModuleOrder order = {},
                         const GroebnerOptions& opts = {});

bool membership(const VecPoly& v, const PolyModule& m, const GroebnerOptions& opts = {});
bool membership(const Poly& p, const PolyModule& m, const GroebnerOptions& opts = {});

// true iff the two submodules of the same free module are equal.
bool module_equal(const PolyModule& a, const PolyModule& b, const GroebnerOptions& opts = {});

// Generating set of the relations among m's generators (in R^t, t = #generators).
// When m is graded, the result carries the induced Schreyer shifts.
PolyModule syzygies(const PolyModule& m, const GroebnerOptions& opts = {});

}  // namespace bsarr

#endif
