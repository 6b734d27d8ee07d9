#ifndef BSARR_LOGARITHMIC_HPP
#define BSARR_LOGARITHMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsarr/groebner.hpp"
#include "bsarr/resolution.hpp"

namespace bsarr {

// Der(-log f) as a submodule of R^n: tuples (a_1..a_n) with
// sum a_i df/dx_i in (f). Computed from the syzygies of
// (df/dx_1, .., df/dx_n, f).
PolyModule log_derivations(const Poly& f, const GroebnerOptions& opts = {});

struct AnnihilatorElement {
    VecPoly derivation;          // coefficient tuple of delta
    std::vector<Poly> s_linear;  // (delta . f_k) / f_k per factor
};

// psi_F(delta) = delta - sum_k s_k (delta . f_k)/f_k for each generator delta
// of Der(-log prod f_k). DomainError naming the factor when a division fails.
std::vector<AnnihilatorElement> annihilator_generators(const std::vector<Poly>& factors,
                                                       const GroebnerOptions& opts = {});

struct SaitoCertificate {
    std::vector<VecPoly> basis;  // n minimal homogeneous generators
    Poly det;
    Rational unit;  // det = unit * f_red
};

struct SaitoResult {
    bool free = false;
    int minimal_generators = 0;  // Betti obstruction when not free
    std::optional<SaitoCertificate> certificate;
};

// Saito's criterion for a central homogeneous f: free iff n minimal
// generators of Der(-log f) exist with det = c * f_red, c nonzero.
SaitoResult is_free_saito(const Poly& f, const GroebnerOptions& opts = {});

struct LogFormNumerators {
    int k = 0;
    // coordinate meaning: ascending k-subsets of variable indices, lex order
    std::vector<std::vector<int>> subsets;
    PolyModule module;  // ambient rank C(n,k)
};

// Numerator module of Omega^k(log f): tuples omega with df ^ omega in
// f * Omega^{k+1} coordinatewise; eta = omega / f.
LogFormNumerators log_k_forms(const Poly& f, int k, const GroebnerOptions& opts = {});

// Coordinates of df ^ omega over the (k+1)-subsets.
VecPoly wedge_df(const Poly& f, const VecPoly& omega, int k);

// Contraction of delta into the volume form: the (n-1)-form numerator with
// omega_{[n]\{i}} = (-1)^(i-1) delta_i. Since df ^ iota_delta(vol) =
// (delta . f) vol, this maps Der(-log f) onto the Omega^(n-1)(log f)
// numerators for every f.
VecPoly derivation_as_top_form_numerator(const VecPoly& delta);

// Wedge of two 1-form numerator tuples, over the 2-subsets.
VecPoly wedge_one_forms(const VecPoly& a, const VecPoly& b);

// Omega^k(log f) = Omega^k(log f_red) x twist: after clearing poles by f on
// both sides the numerator modules coincide.
bool verify_twist_identity(const Poly& f, int k, const GroebnerOptions& opts = {});

struct ExteriorSquareReport {
    // both modules written over the common denominator f^2
    bool contains_omega2 = false;  // f * N_2(f) inside span{omega_i ^ omega_j}
    bool strict = false;           // and some wedge falls outside f * N_2(f)
};

// Whether wedge products of log 1-forms strictly exceed Omega^2(log f);
// strict for non-reduced divisors like x^2 y^2, equality in the reduced
// free case.
ExteriorSquareReport exterior_square_check(const Poly& f, const GroebnerOptions& opts = {});

// Contraction of every log 1-form generator along every log derivation lands
// in Omega^0(log f), whose numerator ideal is (f_red).
bool contraction_check(const Poly& f, const GroebnerOptions& opts = {});

// The twisted pairing Der(-log f) x Omega^1(log f) -> O: membership for all
// generator pairs, plus an invertible pairing matrix in the free case.
bool pairing_check(const Poly& f, const GroebnerOptions& opts = {});

enum class EulerVerdict { True, Undecided, NotApplicable };

struct EulerReport {
    EulerVerdict verdict = EulerVerdict::Undecided;
    // weights w with (sum w_i x_i d_i) . f = f when verdict is True
    std::optional<std::vector<Rational>> weights;
};

// Strong Euler-homogeneity at the origin in the graded model: homogeneous f
// via the Euler derivation, quasi-homogeneous f via a weight-system solve,
// undecided otherwise.
EulerReport strong_euler_check(const Poly& f);

struct TameReport {
    struct PerK {
        int k = 0;
        std::optional<int> proj_dim;  // nullopt: exceeds k (or capped)
        bool within = false;          // proj dim <= k
        bool capped = false;          // degree cap hit before deciding
    };
    bool tame = false;
    std::string reason;  // shortcut citation or "resolutions up to max_k"
    std::vector<PerK> per_k;
    bool partial = false;  // some degree was capped
};

// n <= 3 and generic arrangements short-circuit; otherwise per-degree graded
// resolutions of the log-form numerator modules decide proj dim <= k.
TameReport tame_check(const Poly& f, int max_k, bool generic_arrangement = false,
                      const GroebnerOptions& opts = {});

// Saito-holonomicity is not decided algorithmically: arrangements report
// "holds", anything else "unknown".
std::string saito_holonomic_note(bool is_arrangement);

}  // namespace bsarr

#endif
