#include "sortic/divisor.hpp"

#include <algorithm>
#include <boost/multiprecision/integer.hpp>
#include <map>

namespace sortic {

namespace {

IntVec q_template(int n, int i) {
    IntVec c(static_cast<size_t>(n + 1), 0);
    c[static_cast<size_t>(i - 1)] = 1;
    return c;
}

IntVec p_template(int n, int i) {
    IntVec c(static_cast<size_t>(n + 1), 0);
    c[static_cast<size_t>(i - 1)] = -1;
    c.back() = 1;
    return c;
}

IntVec l_template(int n, const IntervalPart& b, int d) {
    IntVec c(static_cast<size_t>(n + 1), 0);
    for (int i = b.lo; i <= b.hi; ++i) c[static_cast<size_t>(i - 1)] = -1;
    c.back() = d - 1;
    return c;
}

} // namespace

std::vector<SupportForm> FacetClassification::t_forms() const {
    std::vector<SupportForm> out;
    for (const SupportForm& f : p_forms) out.push_back(f);
    for (const SupportForm& f : l_forms) out.push_back(f);
    for (const SupportForm& f : unexpected)
        if (f.coeffs.back() > 0) out.push_back(f);
    return out;
}

bool FacetClassification::has_unexpected_t_form() const {
    for (const SupportForm& f : unexpected)
        if (f.coeffs.back() > 0) return true;
    return false;
}

FacetClassification classify_facets(const SimplicialComplex& delta,
                                    const std::vector<SupportForm>& forms) {
    RecognitionVerdict rec = is_unit_interval(delta);
    SORTIC_REQUIRE(rec.is_unit_interval && !delta.is_void() && delta.dim() >= 1,
                   "facet classification needs a unit-interval complex of dim >= 1");
    FacetClassification cls;
    cls.n = delta.n();
    cls.d = delta.dim() + 1;

    std::vector<IntervalPart> cliques;
    if (cls.d == 2) {
        // Graph case: every maximal clique (singletons included) gives a
        // clique form with last coefficient 1.
        for (FaceMask c : maximal_cliques(delta))
            cliques.push_back({face_min_vertex(c), face_max_vertex(c), 1});
    } else {
        cliques = rec.clique_intervals;
    }

    std::map<IntVec, int> p_targets;   // template -> vertex
    std::map<IntVec, size_t> l_targets;  // template -> clique index
    if (cls.d > 2)
        for (int i = 1; i <= cls.n; ++i) p_targets[p_template(cls.n, i)] = i;
    for (size_t j = 0; j < cliques.size(); ++j)
        l_targets[l_template(cls.n, cliques[j], cls.d)] = j;

    std::vector<bool> p_found(static_cast<size_t>(cls.n) + 1, false);
    std::vector<bool> l_found(cliques.size(), false);
    for (const SupportForm& f : forms) {
        bool is_q = false;
        for (int i = 1; i <= cls.n && !is_q; ++i)
            is_q = (f.coeffs == q_template(cls.n, i));
        if (is_q) {
            cls.q_forms.push_back(f);
            continue;
        }
        if (auto it = p_targets.find(f.coeffs); it != p_targets.end()) {
            cls.p_forms.push_back(f);
            p_found[static_cast<size_t>(it->second)] = true;
            continue;
        }
        if (auto it = l_targets.find(f.coeffs); it != l_targets.end()) {
            cls.l_forms.push_back(f);
            l_found[it->second] = true;
            continue;
        }
        cls.unexpected.push_back(f);
    }
    if (cls.d > 2)
        for (int i = 1; i <= cls.n; ++i)
            if (!p_found[static_cast<size_t>(i)]) cls.missing_p.push_back(i);
    for (size_t j = 0; j < cliques.size(); ++j)
        if (!l_found[j]) cls.missing_l.push_back(cliques[j]);
    return cls;
}

ConjectureVerdict conjecture_check(const FacetClassification& cls) {
    SORTIC_REQUIRE(cls.d > 2, "the prime enumeration question concerns dim > 1");
    SORTIC_CHECK(cls.missing_p.empty() && cls.missing_l.empty(),
                 "a proven height-one prime is missing from the facet list");
    for (const SupportForm& f : cls.unexpected) {
        if (f.coeffs.back() > 0)
            return {ConjectureStatus::counterexample, f};
        SORTIC_CHECK(false, "facet form without t outside the coordinate list");
    }
    return {ConjectureStatus::confirmed, std::nullopt};
}

ConjectureVerdict conjecture_check(const SimplicialComplex& delta) {
    ConeDescription cone = cone_of(independence_complex(delta));
    return conjecture_check(classify_facets(delta, cone.facet_forms));
}

ClassGroup class_group(const FacetClassification& cls) {
    std::vector<SupportForm> tf = cls.t_forms();
    SORTIC_REQUIRE(!tf.empty(), "class group needs at least one prime containing t");
    ClassGroup g;
    g.free_rank = static_cast<long long>(tf.size()) - 1;
    Integer gcd = 0;
    for (const SupportForm& f : tf) gcd = boost::multiprecision::gcd(gcd, f.coeffs.back());
    g.torsion = gcd;
    return g;
}

GorensteinResult gorenstein_test(const FacetClassification& cls) {
    GorensteinResult res;
    res.conditional = cls.has_unexpected_t_form();
    std::optional<Integer> a;
    for (const SupportForm& f : cls.t_forms()) {
        Integer sum = 0;
        for (size_t j = 0; j + 1 < f.coeffs.size(); ++j) sum += f.coeffs[j];
        Integer need = 1 - sum;
        Integer ct = f.coeffs.back();
        if (need % ct != 0) return res;
        Integer cand = need / ct;
        if (a && *a != cand) return res;
        a = cand;
    }
    res.a = a;
    return res;
}

AInvariant a_invariant(const ConeDescription& cone) {
    const int n = cone.ambient_dim - 1;
    // Level bound: the all-ones point is strictly interior once k clears
    // every t-form, so the search below is guaranteed to stop.
    long long k_max = 2;
    for (const SupportForm& f : cone.facet_forms) {
        if (f.coeffs.back() <= 0) continue;
        Integer sum = 0;
        for (size_t j = 0; j + 1 < f.coeffs.size(); ++j) sum += f.coeffs[j];
        Integer need = 1 - sum;  // k*c_t >= need
        Integer ct = f.coeffs.back();
        Integer lvl = (need + ct - 1) / ct;
        k_max = std::max(k_max, to_long_checked(lvl));
    }

    // Small fast copies of the forms.
    std::vector<std::vector<long long>> forms;
    for (const SupportForm& f : cone.facet_forms) {
        std::vector<long long> c;
        for (const Integer& x : f.coeffs) c.push_back(to_long_checked(x));
        forms.push_back(std::move(c));
    }

    std::vector<long long> point(static_cast<size_t>(n), 0);
    // DFS in lexicographic order; the first full assignment strictly positive
    // on every form is the witness.
    for (long long k = 1; k <= k_max; ++k) {
        // suffix_best[f][i]: largest value positions i..n-1 can still add.
        std::vector<std::vector<long long>> suffix_best(forms.size());
        for (size_t fi = 0; fi < forms.size(); ++fi) {
            suffix_best[fi].assign(static_cast<size_t>(n) + 1, 0);
            for (int i = n - 1; i >= 0; --i) {
                long long c = forms[fi][static_cast<size_t>(i)];
                suffix_best[fi][static_cast<size_t>(i)] =
                    suffix_best[fi][static_cast<size_t>(i) + 1] +
                    (c > 0 ? c * (k - 1) : c);
            }
        }
        std::vector<long long> partial(forms.size());
        for (size_t fi = 0; fi < forms.size(); ++fi)
            partial[fi] = forms[fi][static_cast<size_t>(n)] * k;

        auto dfs = [&](auto&& self, int pos) -> bool {
            if (pos == n) {
                for (long long v : partial)
                    if (v <= 0) return false;
                return true;
            }
            if (k == 1) return false;  // coordinates need 1 <= a_i <= k-1
            for (long long x = 1; x <= k - 1; ++x) {
                point[static_cast<size_t>(pos)] = x;
                bool feasible = true;
                for (size_t fi = 0; fi < forms.size() && feasible; ++fi) {
                    partial[fi] += forms[fi][static_cast<size_t>(pos)] * x;
                    if (partial[fi] + suffix_best[fi][static_cast<size_t>(pos) + 1] <= 0)
                        feasible = false;
                }
                if (feasible && self(self, pos + 1)) return true;
                for (size_t fi = 0; fi < forms.size(); ++fi)
                    partial[fi] -= forms[fi][static_cast<size_t>(pos)] * x;
            }
            return false;
        };
        // Rebuild partial correctly before each level's search.
        bool found;
        if (n == 0) {
            found = true;
            for (long long v : partial)
                if (v <= 0) found = false;
        } else {
            found = dfs(dfs, 0);
        }
        if (found) {
            AInvariant res;
            res.a = -k;
            res.witness.coords.assign(static_cast<size_t>(n + 1), 0);
            for (int i = 0; i < n; ++i)
                res.witness.coords[static_cast<size_t>(i)] = point[static_cast<size_t>(i)];
            res.witness.coords.back() = k;
            SORTIC_CHECK(strictly_interior(cone, res.witness),
                         "a-invariant witness fails strict positivity");
            return res;
        }
    }
    throw InternalError("a-invariant search exhausted its guaranteed level bound");
}

bool canonical_membership(const ConeDescription& cone, const LatticePoint& p) {
    return strictly_interior(cone, p);
}

long long interior_degree_floor(int omega, int d) {
    SORTIC_REQUIRE(d >= 2 && omega >= 1, "floor needs d >= 2 and a clique");
    const int dm1 = d - 1;
    return (omega + dm1 - 1) / dm1 + (omega % dm1 == 0 ? 1 : 0);
}

namespace {

// One step of the constructive factorization for 1-dimensional Δ: choose an
// independent set meeting every clique whose exponent sum is exactly k-1,
// scanning cliques left to right and taking the largest positive slot.
FaceMask radical_peel_step(const std::vector<FaceMask>& cliques,
                           const std::vector<long long>& a, long long k) {
    FaceMask face = 0;
    int last_vertex = -1;
    for (const FaceMask& b : cliques) {
        if (last_vertex >= 1 && face_contains_vertex(b, last_vertex)) continue;
        long long dj = 0;
        for (int v : face_vertices(b)) dj += a[static_cast<size_t>(v - 1)];
        if (dj != k - 1) continue;
        int pick = -1;
        for (int v : face_vertices(b))
            if (a[static_cast<size_t>(v - 1)] > 0) pick = v;
        SORTIC_CHECK(pick >= 1, "critical clique with no positive slot");
        face = face_with_vertex(face, pick);
        last_vertex = pick;
    }
    return face;
}

} // namespace

TRadicalResult t_radical_test(const SimplicialComplex& delta,
                              const FacetClassification& cls,
                              const ConeDescription& cone,
                              int tdegree_bound) {
    TRadicalResult res;
    std::vector<SupportForm> tf = cls.t_forms();
    SORTIC_REQUIRE(!tf.empty(), "no forms containing t");
    res.radical = true;
    for (const SupportForm& f : tf)
        if (f.coeffs.back() != tf.front().coeffs.back()) res.radical = false;

    if (delta.dim() != 1) return res;

    // In the graph case the primes containing t are exactly the clique forms;
    // the certificate below peels against them.
    SORTIC_CHECK(cls.unexpected.empty() && cls.missing_l.empty(),
                 "graph-case facet classification is not exact");

    // Certificate: every monomial of the intersection of the clique primes
    // factors as (x_F t) * (smaller intersection monomial), ending at t.
    const int n = delta.n();
    std::vector<FaceMask> cliques = maximal_cliques(delta);
    SimplicialComplex gamma = independence_complex(delta);

    auto in_intersection = [&](const std::vector<long long>& a, long long k) {
        for (const FaceMask& b : cliques) {
            long long sum = 0;
            for (int v : face_vertices(b)) sum += a[static_cast<size_t>(v - 1)];
            if (sum >= k) return false;  // clique form must be strictly positive
        }
        return true;
    };

    long long certified = 0;
    std::vector<long long> a(static_cast<size_t>(n), 0);
    auto enumerate = [&](auto&& self, int pos, long long k) -> void {
        if (pos == n) {
            if (!in_intersection(a, k)) return;
            LatticePoint p;
            p.coords.assign(static_cast<size_t>(n + 1), 0);
            for (int i = 0; i < n; ++i) p.coords[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
            p.coords.back() = k;
            if (!cone_contains(cone, p)) return;
            if (!decompose_exhaustive(gamma, p)) return;  // not a ring monomial

            // Peel down to t, checking the independence and membership at
            // every stage.
            std::vector<long long> b = a;
            for (long long level = k; level >= 2; --level) {
                FaceMask face = radical_peel_step(cliques, b, level);
                SORTIC_CHECK(gamma.contains(face),
                             "factorization step picked a dependent set");
                for (int v : face_vertices(face)) --b[static_cast<size_t>(v - 1)];
                SORTIC_CHECK(in_intersection(b, level - 1),
                             "factorization residual left the intersection");
            }
            for (long long x : b)
                SORTIC_CHECK(x == 0, "factorization did not end at the degree variable");
            ++certified;
            return;
        }
        for (long long x = 0; x <= k; ++x) {
            a[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, k);
        }
        a[static_cast<size_t>(pos)] = 0;
    };
    for (long long k = 1; k <= tdegree_bound; ++k) enumerate(enumerate, 0, k);
    res.certified_monomials = certified;
    return res;
}

} // namespace sortic
