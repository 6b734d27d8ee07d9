#include "bsarr/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "bsarr/errors.hpp"

namespace bsarr {

namespace {

std::string form_str(const std::vector<mpz_class>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::vector<Rational> to_rational(const std::vector<mpz_class>& v) {
    std::vector<Rational> r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

}  // namespace

Arrangement::Arrangement(int n, std::vector<std::vector<Rational>> forms, std::vector<int> mults,
                         std::string label)
    : n_(n), label_(std::move(label)) {
    if (n <= 0) throw StructuralError("ambient dimension must be positive");
    if (forms.empty()) throw DomainError("empty arrangement");
    if (forms.size() != mults.size()) throw StructuralError("forms/multiplicities length mismatch");
    for (size_t i = 0; i < forms.size(); ++i) {
        if (static_cast<int>(forms[i].size()) != n)
            throw StructuralError("form coefficient vector has wrong length");
        if (mults[i] <= 0) throw StructuralError("multiplicities must be positive");
        std::vector<mpz_class> c = clear_denominators(forms[i]);
        bool zero = true;
        for (const auto& x : c)
            if (x != 0) zero = false;
        if (zero) throw StructuralError("zero linear form in arrangement");
        forms_.push_back({std::move(c), mults[i]});
    }
    for (size_t i = 0; i < forms_.size(); ++i) {
        int di = -1;
        for (size_t k = 0; k < distinct_.size(); ++k) {
            if (distinct_[k] == forms_[i].coeffs) {
                di = static_cast<int>(k);
                break;
            }
        }
        if (di < 0) {
            di = static_cast<int>(distinct_.size());
            distinct_.push_back(forms_[i].coeffs);
        }
        entry_distinct_.push_back(di);
        for (int m = 0; m < forms_[i].mult; ++m) expanded_entry_.push_back(static_cast<int>(i));
    }
    degree_ = static_cast<int>(expanded_entry_.size());
}

bool Arrangement::is_reduced() const {
    if (distinct_.size() != forms_.size()) return false;
    for (const auto& f : forms_)
        if (f.mult != 1) return false;
    return true;
}

std::vector<int> Arrangement::expanded_of_distinct(int distinct_index) const {
    std::vector<int> out;
    for (int e = 0; e < degree_; ++e)
        if (entry_distinct_[expanded_entry_[e]] == distinct_index) out.push_back(e);
    return out;
}

std::vector<Rational> Arrangement::form_rational(int distinct_index) const {
    return to_rational(distinct_[distinct_index]);
}

std::vector<std::string> Arrangement::default_vars(int n) {
    if (n <= 4) {
        static const std::vector<std::string> letters{"x", "y", "z", "w"};
        return std::vector<std::string>(letters.begin(), letters.begin() + n);
    }
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

Poly Arrangement::defining_polynomial(std::vector<std::string> vars) const {
    if (vars.empty()) vars = default_vars(n_);
    if (static_cast<int>(vars.size()) != n_)
        throw StructuralError("variable list length does not match ambient dimension");
    Poly f = Poly::constant(vars, Rational(1));
    for (const auto& entry : forms_) {
        Poly l = Poly::zero(vars);
        for (int j = 0; j < n_; ++j) {
            if (entry.coeffs[j] == 0) continue;
            l += Poly::variable(vars, j).scaled(Rational(entry.coeffs[j]));
        }
        for (int m = 0; m < entry.mult; ++m) f *= l;
    }
    return f;
}

void Factorization::validate(int degree) const {
    std::vector<int> seen(degree, 0);
    if (groups.empty()) throw StructuralError("factorization needs at least one group");
    for (const auto& g : groups) {
        if (g.empty()) throw StructuralError("factorization group is empty");
        for (int i : g) {
            if (i < 0 || i >= degree)
                throw StructuralError("factorization index " + std::to_string(i) +
                                      " out of range [0, " + std::to_string(degree) + ")");
            if (seen[i]++)
                throw StructuralError("factorization index " + std::to_string(i) + " repeated");
        }
    }
    for (int i = 0; i < degree; ++i)
        if (!seen[i])
            throw StructuralError("factorization misses index " + std::to_string(i));
}

Factorization linear_factorization(const Arrangement& a) {
    Factorization f;
    for (int i = 0; i < a.degree(); ++i) f.groups.push_back({i});
    return f;
}

Factorization trivial_factorization(const Arrangement& a) {
    Factorization f;
    f.groups.emplace_back();
    for (int i = 0; i < a.degree(); ++i) f.groups[0].push_back(i);
    return f;
}

namespace {

// rank of the set of distinct forms indexed by `which`
int span_rank(const Arrangement& a, const std::vector<int>& which) {
    if (which.empty()) return 0;
    QMatrix m(static_cast<int>(which.size()), a.n());
    for (size_t i = 0; i < which.size(); ++i) {
        auto row = a.form_rational(which[i]);
        for (int j = 0; j < a.n(); ++j) m.at(static_cast<int>(i), j) = row[j];
    }
    return m.rank();
}

// J-closure at the distinct-form level: all distinct forms lying in the span
// of the given ones.
std::vector<int> j_closure(const Arrangement& a, const std::vector<int>& which) {
    int base = span_rank(a, which);
    std::vector<int> J;
    int nd = static_cast<int>(a.distinct_forms().size());
    for (int k = 0; k < nd; ++k) {
        std::vector<int> ext = which;
        ext.push_back(k);
        if (span_rank(a, ext) == base) J.push_back(k);
    }
    return J;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool edge_indecomposable(const Arrangement& a, const std::vector<int>& J_distinct) {
    if (J_distinct.empty()) return false;  // ambient edge
    std::vector<std::vector<Rational>> vecs;
    for (int k : J_distinct) vecs.push_back(a.form_rational(k));
    auto comp = matroid_components(vecs);
    for (int c : comp)
        if (c != comp[0]) return false;
    return true;
}

std::vector<std::vector<mpz_class>> rref_basis(const Arrangement& a,
                                               const std::vector<int>& J_distinct) {
    if (J_distinct.empty()) return {};
    QMatrix m(static_cast<int>(J_distinct.size()), a.n());
    for (size_t i = 0; i < J_distinct.size(); ++i) {
        auto row = a.form_rational(J_distinct[i]);
        for (int j = 0; j < a.n(); ++j) m.at(static_cast<int>(i), j) = row[j];
    }
    QMatrix r = m.rref();
    std::vector<std::vector<mpz_class>> rows;
    for (int i = 0; i < r.rows(); ++i) rows.push_back(clear_denominators(r.row(i)));
    return rows;
}

}  // namespace

std::vector<int> matroid_components_with_basis(const std::vector<std::vector<Rational>>& vectors,
                                               const std::vector<int>& basis) {
    int m = static_cast<int>(vectors.size());
    UnionFind uf(m);
    if (basis.empty()) throw StructuralError("matroid basis must be nonempty");
    QMatrix bmat(static_cast<int>(vectors[0].size()), static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (size_t r = 0; r < vectors[0].size(); ++r)
            bmat.at(static_cast<int>(r), static_cast<int>(c)) = vectors[basis[c]][r];
    std::vector<bool> in_basis(m, false);
    for (int b : basis) in_basis[b] = true;
    for (int e = 0; e < m; ++e) {
        if (in_basis[e]) continue;
        auto sol = bmat.solve(vectors[e]);
        if (!sol) throw StructuralError("matroid basis does not span the given vectors");
        // fundamental circuit of e: {e} plus the support of its expansion
        for (size_t c = 0; c < basis.size(); ++c)
            if (!(*sol)[c].is_zero()) uf.unite(e, basis[c]);
    }
    std::vector<int> comp(m);
    std::map<int, int> relabel;
    for (int i = 0; i < m; ++i) {
        int root = uf.find(i);
        auto [it, fresh] = relabel.emplace(root, static_cast<int>(relabel.size()));
        comp[i] = it->second;
    }
    return comp;
}

std::vector<int> matroid_components(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return {};
    std::vector<int> basis;
    std::vector<std::vector<Rational>> rows;
    for (size_t i = 0; i < vectors.size(); ++i) {
        rows.push_back(vectors[i]);
        QMatrix m = QMatrix::from_rows(rows);
        if (m.rank() == static_cast<int>(basis.size()) + 1)
            basis.push_back(static_cast<int>(i));
        else
            rows.pop_back();
    }
    return matroid_components_with_basis(vectors, basis);
}

Lattice intersection_lattice(const Arrangement& a) {
    int nd = static_cast<int>(a.distinct_forms().size());

    // dedupe edges by their distinct-level J set
    std::map<std::vector<int>, int> edge_index;
    std::vector<std::vector<int>> edge_J;  // distinct-level
    std::vector<int> worklist;

    auto add_edge = [&](const std::vector<int>& seed) -> int {
        std::vector<int> J = j_closure(a, seed);
        auto it = edge_index.find(J);
        if (it != edge_index.end()) return it->second;
        int id = static_cast<int>(edge_J.size());
        edge_index.emplace(J, id);
        edge_J.push_back(J);
        worklist.push_back(id);
        return id;
    };

    add_edge({});  // ambient space
    for (int k = 0; k < nd; ++k) add_edge({k});

    while (!worklist.empty()) {
        int id = worklist.back();
        worklist.pop_back();
        std::vector<int> J = edge_J[id];  // copy: edge_J may grow
        for (int k = 0; k < nd; ++k) {
            if (std::binary_search(J.begin(), J.end(), k)) continue;
            std::vector<int> seed = J;
            seed.push_back(k);
            add_edge(seed);
        }
    }

    Lattice lat;
    for (const auto& J : edge_J) {
        LatticeEdge e;
        e.rank = span_rank(a, J);
        e.basis = rref_basis(a, J);
        for (int k : J) {
            auto exp = a.expanded_of_distinct(k);
            e.J.insert(e.J.end(), exp.begin(), exp.end());
        }
        std::sort(e.J.begin(), e.J.end());
        e.d_X = static_cast<int>(e.J.size());
        e.indecomposable = edge_indecomposable(a, J);
        lat.edges.push_back(std::move(e));
    }
    std::sort(lat.edges.begin(), lat.edges.end(), [](const LatticeEdge& x, const LatticeEdge& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.J < y.J;
    });
    for (size_t i = 0; i < lat.edges.size(); ++i) {
        for (size_t j = 0; j < lat.edges.size(); ++j) {
            if (i == j) continue;
            const auto &J1 = lat.edges[i].J, &J2 = lat.edges[j].J;
            if (J1.size() <= J2.size()) continue;
            // edge i is contained in edge j iff J(i) contains J(j)
            if (std::includes(J1.begin(), J1.end(), J2.begin(), J2.end()))
                lat.containments.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return lat;
}

bool is_indecomposable(const LatticeEdge& e, const Arrangement& a) {
    std::vector<int> J_distinct;
    for (int j : e.J) {
        int k = a.entry_distinct()[a.expanded_entry()[j]];
        if (J_distinct.empty() || J_distinct.back() != k) J_distinct.push_back(k);
    }
    std::sort(J_distinct.begin(), J_distinct.end());
    J_distinct.erase(std::unique(J_distinct.begin(), J_distinct.end()), J_distinct.end());
    return edge_indecomposable(a, J_distinct);
}

GenericityReport is_generic(const Arrangement& a) {
    for (size_t i = 0; i < a.forms().size(); ++i) {
        if (a.forms()[i].mult > 1)
            throw DomainError("non-reduced arrangement: form " + form_str(a.forms()[i].coeffs) +
                              " has multiplicity " + std::to_string(a.forms()[i].mult));
        for (size_t j = 0; j < i; ++j)
            if (a.forms()[j].coeffs == a.forms()[i].coeffs)
                throw DomainError("non-reduced arrangement: duplicate form " +
                                  form_str(a.forms()[i].coeffs));
    }
    int n = a.n(), d = a.degree();
    GenericityReport rep;
    rep.enough_forms = d > n;

    rep.independent = true;
    std::vector<int> subset;
    std::function<bool(int)> go = [&](int start) -> bool {
        if (static_cast<int>(subset.size()) == n) return span_rank(a, subset) == n;
        for (int k = start; k < d; ++k) {
            subset.push_back(k);  // reduced: expanded == entry == distinct index
            if (!go(k + 1)) return false;
            subset.pop_back();
        }
        return true;
    };
    if (d >= n) rep.independent = go(0);
    return rep;
}

EdgeFactorizationProfile restrict_factorization(const LatticeEdge& e, const Factorization& f,
                                                int degree) {
    f.validate(degree);
    EdgeFactorizationProfile p;
    p.d_X = e.d_X;
    for (const auto& group : f.groups) {
        int c = 0;
        for (int i : group)
            if (std::binary_search(e.J.begin(), e.J.end(), i)) ++c;
        p.group_degrees.push_back(c);
    }
    return p;
}

namespace {

struct IsoContext {
    int d;
    // J sets (entry-level, reduced arrangements) with ranks, per arrangement
    std::set<std::pair<std::vector<int>, int>> edges_b;
    std::vector<std::pair<std::vector<int>, int>> edges_a;
};

bool iso_backtrack(const IsoContext& ctx, std::vector<int>& image, std::vector<bool>& used,
                   const std::vector<std::vector<int>>& candidates, int next) {
    if (next == ctx.d) {
        for (const auto& [J, rank] : ctx.edges_a) {
            std::vector<int> mapped;
            mapped.reserve(J.size());
            for (int i : J) mapped.push_back(image[i]);
            std::sort(mapped.begin(), mapped.end());
            if (!ctx.edges_b.count({mapped, rank})) return false;
        }
        return true;
    }
    for (int cand : candidates[next]) {
        if (used[cand]) continue;
        image[next] = cand;
        used[cand] = true;
        // prune: every fully-assigned A-edge must map onto a B-edge of equal rank
        bool ok = true;
        for (const auto& [J, rank] : ctx.edges_a) {
            bool assigned = true;
            for (int i : J)
                if (i > next) {
                    assigned = false;
                    break;
                }
            if (!assigned) continue;
            std::vector<int> mapped;
            mapped.reserve(J.size());
            for (int i : J) mapped.push_back(image[i]);
            std::sort(mapped.begin(), mapped.end());
            if (!ctx.edges_b.count({mapped, rank})) {
                ok = false;
                break;
            }
        }
        if (ok && iso_backtrack(ctx, image, used, candidates, next + 1)) return true;
        used[cand] = false;
    }
    return false;
}

std::vector<std::multiset<std::pair<int, int>>> hyperplane_profiles(const Lattice& lat, int d) {
    std::vector<std::multiset<std::pair<int, int>>> prof(d);
    for (const auto& e : lat.edges)
        for (int i : e.J) prof[i].insert({e.rank, e.d_X});
    return prof;
}

}  // namespace

bool lattice_isomorphic(const Arrangement& a, const Arrangement& b) {
    if (!a.is_reduced() || !b.is_reduced())
        throw DomainError("lattice_isomorphic requires reduced arrangements");
    if (a.degree() != b.degree()) return false;
    int d = a.degree();

    Lattice la = intersection_lattice(a), lb = intersection_lattice(b);
    if (la.edges.size() != lb.edges.size()) return false;
    std::multiset<std::pair<int, int>> sig_a, sig_b;
    for (const auto& e : la.edges) sig_a.insert({e.rank, e.d_X});
    for (const auto& e : lb.edges) sig_b.insert({e.rank, e.d_X});
    if (sig_a != sig_b) return false;

    auto prof_a = hyperplane_profiles(la, d), prof_b = hyperplane_profiles(lb, d);
    std::vector<std::vector<int>> candidates(d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j)
            if (prof_a[i] == prof_b[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return false;
    }

    IsoContext ctx;
    ctx.d = d;
    for (const auto& e : la.edges) ctx.edges_a.emplace_back(e.J, e.rank);
    for (const auto& e : lb.edges) ctx.edges_b.insert({e.J, e.rank});
    // assign most-constrained hyperplanes first would need reordering; the
    // invariant pruning keeps the search small at these sizes
    std::vector<int> image(d, -1);
    std::vector<bool> used(d, false);
    return iso_backtrack(ctx, image, used, candidates, 0);
}

}  // namespace bsarr
