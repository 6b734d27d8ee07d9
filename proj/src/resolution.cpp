#include "bsarr/resolution.hpp"

#include <algorithm>

#include "bsarr/errors.hpp"

namespace bsarr {

namespace {

std::vector<int> shifts_or_zero(const PolyModule& m) {
    if (m.shifts) return *m.shifts;
    return std::vector<int>(m.ambient_rank, 0);
}

}  // namespace

std::vector<VecPoly> minimal_generators(const PolyModule& m, const GroebnerOptions& opts) {
    m.validate();
    std::vector<int> shifts = shifts_or_zero(m);

    struct Cand {
        int degree;
        size_t index;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < m.generators.size(); ++i) {
        if (m.generators[i].is_zero()) continue;
        auto d = homogeneous_degree(m.generators[i], shifts);
        if (!d) throw DomainError("non-homogeneous generator in graded module");
        cands.push_back({*d, i});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.degree < b.degree;
    });

    std::vector<VecPoly> kept;
    for (const auto& c : cands) {
        const VecPoly& g = m.generators[c.index];
        if (!kept.empty()) {
            PolyModule sub;
            sub.vars = m.vars;
            sub.ambient_rank = m.ambient_rank;
            sub.generators = kept;
            if (buchberger(sub, {}, opts).contains(g)) continue;
        }
        kept.push_back(g);
    }
    return kept;
}

Resolution graded_minimal_resolution(const PolyModule& m, int max_length,
                                     const GroebnerOptions& opts) {
    if (max_length < 0) throw StructuralError("max_length must be >= 0");
    Resolution res;

    PolyModule cur = m;
    cur.shifts = shifts_or_zero(m);
    for (int step = 0; step <= max_length; ++step) {
        std::vector<VecPoly> gens = minimal_generators(cur, opts);
        if (gens.empty()) {
            // the previous step's syzygies were zero: resolution already ended
            res.proj_dim = step - 1;
            return res;
        }
        BettiStep b;
        b.count = static_cast<int>(gens.size());
        for (const auto& g : gens) b.degrees.push_back(*homogeneous_degree(g, *cur.shifts));
        std::sort(b.degrees.begin(), b.degrees.end());
        res.betti.push_back(std::move(b));

        PolyModule min;
        min.vars = cur.vars;
        min.ambient_rank = cur.ambient_rank;
        min.generators = std::move(gens);
        min.shifts = cur.shifts;
        PolyModule syz = syzygies(min, opts);
        if (syz.generators.empty()) {
            res.proj_dim = step;
            return res;
        }
        cur = std::move(syz);
        if (!cur.shifts)
            throw DomainError("internal: syzygies of a graded module lost the grading");
    }
    return res;  // proj_dim not reached within max_length
}

}  // namespace bsarr
