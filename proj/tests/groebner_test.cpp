#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsarr/errors.hpp"
#include "bsarr/groebner.hpp"
#include "bsarr/parse.hpp"
#include "bsarr/resolution.hpp"

using namespace bsarr;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

PolyModule ideal_of(const std::vector<std::string>& vars, std::initializer_list<const char*> gens) {
    std::vector<Poly> ps;
    for (const char* g : gens) ps.push_back(parse_poly(g, vars));
    return PolyModule::ideal(std::move(ps));
}

VecPoly vec(const std::vector<std::string>& vars, std::initializer_list<const char*> comps) {
    std::vector<Poly> ps;
    for (const char* c : comps) ps.push_back(parse_poly(c, vars));
    return VecPoly(std::move(ps));
}

PolyModule module_of(const std::vector<std::string>& vars, int rank,
                     std::initializer_list<std::initializer_list<const char*>> gens) {
    PolyModule m;
    m.vars = vars;
    m.ambient_rank = rank;
    for (auto g : gens) m.generators.push_back(vec(vars, g));
    m.validate();
    return m;
}

// Dimension of the degree-d graded piece of a submodule, read off the lead
// module of a Groebner basis. Independent route used by the Hilbert check.
int graded_piece_dim(const GroebnerBasis& gb, const std::vector<int>& shifts, int deg, int nvars) {
    std::vector<std::pair<int, Exponents>> leads;
    for (const auto& e : gb.elements()) {
        ModuleTerm lt = leading_term(e, gb.order());
        leads.emplace_back(lt.pos, lt.exps);
    }
    // enumerate all monomials x^a e_p with |a| + shifts[p] == deg
    int count = 0;
    for (int p = 0; p < gb.rank(); ++p) {
        int d = deg - shifts[p];
        if (d < 0) continue;
        std::vector<int> a(nvars, 0);
        // iterate compositions of d into nvars parts
        std::function<void(int, int)> go = [&](int i, int left) {
            if (i == nvars - 1) {
                a[i] = left;
                for (const auto& [lp, le] : leads) {
                    if (lp != p) continue;
                    bool div = true;
                    for (int k = 0; k < nvars; ++k)
                        if (le[k] > a[k]) { div = false; break; }
                    if (div) { ++count; return; }
                }
                return;
            }
            for (int v = 0; v <= left; ++v) {
                a[i] = v;
                go(i + 1, left - v);
            }
        };
        go(0, d);
    }
    return count;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("buchberger on monomial and principal ideals") {
    auto gb = buchberger(ideal_of(XY, {"x", "y"}));
    REQUIRE(gb.elements().size() == 2);
    CHECK(gb.contains(vec(XY, {"x"})));
    CHECK(gb.contains(vec(XY, {"y"})));

    auto principal = buchberger(ideal_of(XY, {"x*y"}));
    CHECK(principal.elements().size() == 1);
    CHECK(principal.elements()[0] == vec(XY, {"x*y"}));
}

TEST_CASE("membership: x^4 in (x^2 - y, y^2)") {
    // hand reduction: x^4 = (x^2 - y)(x^2 + y) + y^2
    auto lhs = parse_poly("(x^2 - y)*(x^2 + y) + y^2", XY);
    CHECK(lhs == parse_poly("x^4", XY));
    auto m = ideal_of(XY, {"x^2 - y", "y^2"});
    CHECK(membership(parse_poly("x^4", XY), m));
    CHECK(!membership(parse_poly("x^2", XY), m));
}

TEST_CASE("membership basics") {
    auto m = ideal_of(XY, {"x"});
    CHECK(membership(parse_poly("x^2 + x*y", XY), m));
    CHECK(!membership(parse_poly("y", XY), m));
    CHECK_THROWS_AS(membership(vec(XY, {"x", "y"}), m), StructuralError);
}

TEST_CASE("membership for the x^2y^2 log-form condition") {
    // condition 2xy(by - ax) in (x^2y^2) with a = y, b = x collapses to zero
    auto p = parse_poly("2*x*y*(x*y - y*x)", XY);
    CHECK(p.is_zero());
    CHECK(membership(p, ideal_of(XY, {"x^2*y^2"})));
}

TEST_CASE("syzygies: Koszul relations") {
    auto syz = syzygies(ideal_of(XY, {"x", "y"}));
    REQUIRE(syz.ambient_rank == 2);
    REQUIRE(!syz.generators.empty());
    // generated by (y, -x)
    PolyModule expected = module_of(XY, 2, {{"y", "-x"}});
    CHECK(module_equal(syz, expected));
}

TEST_CASE("syzygies: equal generators") {
    auto syz = syzygies(ideal_of(XY, {"x", "x"}));
    PolyModule expected = module_of(XY, 2, {{"1", "-1"}});
    CHECK(module_equal(syz, expected));
}

TEST_CASE("syzygies of (y, x, xy) contain the derivation relations") {
    // (x, 0, -1) and (0, y, -1) annihilate (df/dx, df/dy, f) for f = xy
    auto syz = syzygies(ideal_of(XY, {"y", "x", "x*y"}));
    GroebnerBasis gb = buchberger(syz);
    CHECK(gb.contains(vec(XY, {"x", "0", "-1"})));
    CHECK(gb.contains(vec(XY, {"0", "y", "-1"})));
}

TEST_CASE("syzygy outputs annihilate their generators exactly") {
    std::vector<PolyModule> fixtures = {
        ideal_of(XY, {"x", "y"}),
        ideal_of(XY, {"y", "x", "x*y"}),
        ideal_of(XYZ, {"x*y - z^2", "y^2", "x + z"}),
        module_of(XY, 2, {{"x", "y"}, {"y", "x"}, {"x^2", "0"}}),
    };
    for (const auto& m : fixtures) {
        auto syz = syzygies(m);
        for (const auto& s : syz.generators) {
            VecPoly acc(m.vars, m.ambient_rank);
            for (size_t i = 0; i < m.generators.size(); ++i)
                acc += m.generators[i].times(s[static_cast<int>(i)]);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("groebner self-certification and round-trip membership") {
    std::vector<PolyModule> fixtures = {
        ideal_of(XY, {"x^2 - y", "y^2"}),
        ideal_of(XYZ, {"x*y - z", "y*z - x", "x*z - y"}),
        module_of(XY, 2, {{"x", "y"}, {"y^2", "x"}}),
    };
    for (const auto& m : fixtures) {
        GroebnerBasis gb = buchberger(m);
        CHECK(gb.spairs_reduce_to_zero());
        for (const auto& g : m.generators) CHECK(gb.contains(g));
        PolyModule back;
        back.vars = m.vars;
        back.ambient_rank = m.ambient_rank;
        back.generators = gb.elements();
        CHECK(module_equal(m, back));
    }
}

TEST_CASE("deterministic output") {
    auto m = ideal_of(XYZ, {"x*y - z", "y*z - x", "x*z - y"});
    auto g1 = buchberger(m), g2 = buchberger(m);
    REQUIRE(g1.elements().size() == g2.elements().size());
    for (size_t i = 0; i < g1.elements().size(); ++i) CHECK(g1.elements()[i] == g2.elements()[i]);
}

TEST_CASE("module_equal") {
    CHECK(module_equal(ideal_of(XY, {"x", "y"}), ideal_of(XY, {"y", "x + y"})));
    CHECK(!module_equal(ideal_of(XY, {"x"}), ideal_of(XY, {"x^2"})));
    PolyModule a = module_of(XY, 2, {{"y", "0"}, {"0", "x"}});
    PolyModule b = module_of(XY, 2, {{"0", "x"}, {"y", "0"}});
    CHECK(module_equal(a, b));
    CHECK_THROWS_AS(module_equal(a, ideal_of(XY, {"x"})), StructuralError);
}

TEST_CASE("degree cap raises an explicit error") {
    GroebnerOptions opts;
    opts.degree_cap = 3;
    CHECK_THROWS_AS(buchberger(ideal_of(XY, {"x^5 + y"}), {}, opts), CapExceededError);
}

TEST_CASE("graded minimal resolution: Koszul complexes") {
    auto m2 = ideal_of(XY, {"x", "y"});
    auto r2 = graded_minimal_resolution(m2, 5);
    REQUIRE(r2.betti.size() == 2);
    CHECK(r2.betti[0].count == 2);
    CHECK(r2.betti[1].count == 1);
    CHECK(r2.proj_dim == 1);
    CHECK(r2.betti[1].degrees == std::vector<int>{2});

    auto m3 = ideal_of(XYZ, {"x", "y", "z"});
    auto r3 = graded_minimal_resolution(m3, 5);
    REQUIRE(r3.betti.size() == 3);
    CHECK(r3.betti[0].count == 3);
    CHECK(r3.betti[1].count == 3);
    CHECK(r3.betti[2].count == 1);
    CHECK(r3.proj_dim == 2);
}

TEST_CASE("graded minimal resolution: free module") {
    PolyModule f = module_of(XY, 2, {{"1", "0"}, {"0", "1"}});
    auto r = graded_minimal_resolution(f, 3);
    REQUIRE(r.betti.size() == 1);
    CHECK(r.betti[0].count == 2);
    CHECK(r.proj_dim == 0);
}

TEST_CASE("resolution rejects non-homogeneous input and respects the cap") {
    CHECK_THROWS_AS(graded_minimal_resolution(ideal_of(XY, {"x + x^2"}), 3), DomainError);
    auto r = graded_minimal_resolution(ideal_of(XYZ, {"x", "y", "z"}), 1);
    CHECK(!r.proj_dim.has_value());  // pd 2 exceeds the requested length
}

TEST_CASE("minimal generators prune redundancy") {
    auto m = ideal_of(XY, {"x", "y", "x + y", "x^2"});
    auto gens = minimal_generators(m);
    CHECK(gens.size() == 2);
}

TEST_CASE("randomized engine properties") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> nterms(1, 3), expo(0, 2), coef(-3, 3), ngens(2, 4);
    auto random_poly = [&](const std::vector<std::string>& vars) {
        Poly p(vars);
        for (int t = nterms(rng); t > 0; --t) {
            Exponents e(vars.size());
            for (auto& x : e) x = expo(rng);
            int c = coef(rng);
            if (c) p.add_term(e, Rational(c));
        }
        return p;
    };
    for (int round = 0; round < 15; ++round) {
        std::vector<Poly> gens;
        for (int g = ngens(rng); g > 0; --g) {
            Poly p = random_poly(XY);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        PolyModule m = PolyModule::ideal(gens);
        GroebnerBasis gb = buchberger(m);
        CHECK(gb.spairs_reduce_to_zero());
        // random combinations of generators are members
        Poly combo = Poly::zero(XY);
        for (const auto& g : m.generators) combo += g[0] * random_poly(XY);
        CHECK(gb.contains(VecPoly({combo})));
        // syzygies annihilate exactly
        for (const auto& s : syzygies(m).generators) {
            VecPoly acc(XY, 1);
            for (size_t i = 0; i < m.generators.size(); ++i)
                acc += m.generators[i].times(s[static_cast<int>(i)]);
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("Hilbert series consistency of graded resolutions") {
    // alternating sum of Betti-weighted free Hilbert functions matches the
    // module's Hilbert function, counted degree by degree up to 6
    std::vector<PolyModule> fixtures = {
        ideal_of(XY, {"x", "y"}),
        ideal_of(XY, {"x^2", "x*y"}),
        ideal_of(XYZ, {"x", "y", "z"}),
        ideal_of(XYZ, {"x*y", "y*z"}),
    };
    for (const auto& m : fixtures) {
        int n = static_cast<int>(m.vars.size());
        auto res = graded_minimal_resolution(m, 6);
        REQUIRE(res.proj_dim.has_value());
        GroebnerBasis gb = buchberger(m);
        std::vector<int> shifts(m.ambient_rank, 0);
        for (int deg = 0; deg <= 6; ++deg) {
            long long expect = graded_piece_dim(gb, shifts, deg, n);
            long long acc = 0;
            int sign = 1;
            for (const auto& step : res.betti) {
                for (int d : step.degrees) acc += sign * binom(deg - d + n - 1, n - 1);
                sign = -sign;
            }
            CHECK(acc == expect);
        }
    }
}
