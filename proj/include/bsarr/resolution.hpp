#ifndef BSARR_RESOLUTION_HPP
#define BSARR_RESOLUTION_HPP

#include <optional>
#include <vector>

#include "bsarr/groebner.hpp"

namespace bsarr {

struct BettiStep {
    int count = 0;
    std::vector<int> degrees;  // generator degrees, ascending
};

struct Resolution {
    std::vector<BettiStep> betti;
    // Projective dimension; nullopt when it exceeds the requested length.
    std::optional<int> proj_dim;
};

// Minimal homogeneous generators of a graded module (shifts default to zero).
// Throws DomainError when a generator is not homogeneous.
std::vector<VecPoly> minimal_generators(const PolyModule& m, const GroebnerOptions& opts = {});

// Minimal graded Betti numbers of m up to max_length steps.
Resolution graded_minimal_resolution(const PolyModule& m, int max_length,
                                     const GroebnerOptions& opts = {});

}  // namespace bsarr

#endif
