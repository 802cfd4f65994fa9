#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortic/divisor.hpp"

using namespace sortic;

namespace {

LatticePoint point(std::initializer_list<long long> coords) {
    LatticePoint p;
    for (long long c : coords) p.coords.push_back(c);
    return p;
}

struct Pipeline {
    SimplicialComplex delta;
    SimplicialComplex gamma;
    ConeDescription cone;
    FacetClassification cls;
};

Pipeline run(const SimplicialComplex& delta) {
    SimplicialComplex gamma = independence_complex(delta);
    ConeDescription cone = cone_of(gamma);
    FacetClassification cls = classify_facets(delta, cone.facet_forms);
    return {delta, std::move(gamma), std::move(cone), std::move(cls)};
}

Pipeline run(const IntervalComplexSpec& spec) {
    return run(build_interval_complex(spec));
}

const Pipeline& k3() {
    static Pipeline p = run(SimplicialComplex::build(3, subsets_of_size(full_face(3), 2)));
    return p;
}
const Pipeline& path3() {
    static Pipeline p = [] {
        std::vector<FaceMask> f{0b011, 0b110};
        return run(SimplicialComplex::build(3, f));
    }();
    return p;
}
const Pipeline& tet4() {
    static Pipeline p = run(SimplicialComplex::build(4, subsets_of_size(full_face(4), 3)));
    return p;
}
const Pipeline& twin3() {
    static Pipeline p = run(IntervalComplexSpec(6, {{1, 3, 2}, {4, 6, 2}}));
    return p;
}

struct Sm64 {
    std::uint64_t s;
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

IntervalComplexSpec random_chain_spec(Sm64& rng, int nmax, int d) {
    std::vector<IntervalPart> parts;
    int lo = 1, hi = rng.range(d, std::min(nmax, d + 2));
    parts.push_back({lo, hi, d - 1});
    while (hi < nmax && rng.next() % 2) {
        int nlo = rng.range(lo + 1, hi + 1);
        int nhi = std::max(hi + 1, nlo + d - 1);
        if (nhi > nmax) break;
        parts.push_back({nlo, nhi, d - 1});
        lo = nlo;
        hi = nhi;
    }
    return IntervalComplexSpec(hi, parts);
}

} // namespace

TEST_CASE("facet classification on the fixtures") {
    CHECK(tet4().cls.q_forms.size() == 4);
    CHECK(tet4().cls.p_forms.size() == 4);
    CHECK(tet4().cls.l_forms.size() == 1);
    CHECK(tet4().cls.unexpected.empty());
    CHECK(tet4().cls.missing_p.empty());
    CHECK(tet4().cls.missing_l.empty());

    CHECK(k3().cls.q_forms.size() == 3);
    CHECK(k3().cls.p_forms.empty());
    CHECK(k3().cls.l_forms.size() == 1);
    CHECK(k3().cls.unexpected.empty());

    CHECK(twin3().cls.q_forms.size() == 6);
    CHECK(twin3().cls.p_forms.size() == 6);
    CHECK(twin3().cls.l_forms.size() == 2);
    CHECK(twin3().cls.unexpected.empty());
}

TEST_CASE("prime enumeration verdicts") {
    CHECK(conjecture_check(tet4().cls).status == ConjectureStatus::confirmed);
    CHECK(conjecture_check(twin3().cls).status == ConjectureStatus::confirmed);

    // Overlapping intervals: still confirmed.
    Pipeline over = run(IntervalComplexSpec(5, {{1, 3, 2}, {3, 5, 2}}));
    CHECK(over.cls.q_forms.size() == 5);
    CHECK(over.cls.p_forms.size() == 5);
    CHECK(over.cls.l_forms.size() == 2);
    CHECK(over.cls.unexpected.empty());
    CHECK(conjecture_check(over.cls).status == ConjectureStatus::confirmed);

    CHECK_THROWS_AS(conjecture_check(k3().cls), PreconditionError);
}

TEST_CASE("class group presentation") {
    ClassGroup twin = class_group(twin3().cls);
    CHECK(twin.free_rank == 7);
    CHECK(twin.torsion == 1);

    ClassGroup k = class_group(k3().cls);
    CHECK(k.free_rank == 0);
    CHECK(k.torsion == 1);

    ClassGroup tet = class_group(tet4().cls);
    CHECK(tet.free_rank == 4);
    CHECK(tet.torsion == 1);
}

TEST_CASE("Gorenstein scalar") {
    GorensteinResult path = gorenstein_test(path3().cls);
    REQUIRE(path.a.has_value());
    CHECK(*path.a == 3);

    GorensteinResult twin = gorenstein_test(twin3().cls);
    REQUIRE(twin.a.has_value());
    CHECK(*twin.a == 2);

    CHECK(!gorenstein_test(tet4().cls).a.has_value());

    GorensteinResult k = gorenstein_test(k3().cls);
    REQUIRE(k.a.has_value());
    CHECK(*k.a == 4);
}

TEST_CASE("a-invariant and canonical witness") {
    AInvariant k = a_invariant(k3().cone);
    CHECK(k.a == -4);
    CHECK(k.witness == point({1, 1, 1, 4}));

    AInvariant tet = a_invariant(tet4().cone);
    CHECK(tet.a == -3);
    CHECK(tet.witness == point({1, 1, 1, 1, 3}));

    AInvariant twin = a_invariant(twin3().cone);
    CHECK(twin.a == -2);
    CHECK(twin.witness == point({1, 1, 1, 1, 1, 1, 2}));

    AInvariant path = a_invariant(path3().cone);
    CHECK(path.a == -3);
    CHECK(path.witness == point({1, 1, 1, 3}));
}

TEST_CASE("canonical membership") {
    CHECK(canonical_membership(k3().cone, point({1, 1, 1, 4})));
    CHECK(!canonical_membership(k3().cone, point({1, 1, 1, 3})));
    // All nine forms are strictly positive here.
    CHECK(canonical_membership(tet4().cone, point({2, 1, 1, 1, 3})));
    CHECK(!canonical_membership(tet4().cone, point({2, 1, 1, 1, 2})));
}

TEST_CASE("radicality of the degree ideal") {
    TRadicalResult k = t_radical_test(k3().delta, k3().cls, k3().cone);
    CHECK(k.radical);
    REQUIRE(k.certified_monomials.has_value());
    CHECK(*k.certified_monomials > 0);

    TRadicalResult tet = t_radical_test(tet4().delta, tet4().cls, tet4().cone);
    CHECK(!tet.radical);
    CHECK(!tet.certified_monomials.has_value());

    TRadicalResult path = t_radical_test(path3().delta, path3().cls, path3().cone);
    CHECK(path.radical);
    REQUIRE(path.certified_monomials.has_value());
    CHECK(*path.certified_monomials > 0);

    TRadicalResult twin = t_radical_test(twin3().delta, twin3().cls, twin3().cone);
    CHECK(!twin.radical);
}

TEST_CASE("graph-case concordance on random instances") {
    Sm64 rng{2024};
    int gorenstein_seen = 0;
    for (int iter = 0; iter < 40; ++iter) {
        Pipeline p = run(random_chain_spec(rng, 7, 2));
        if (p.delta.is_void()) continue;

        // Every template shows up; nothing else does.
        CHECK(p.cls.missing_l.empty());
        CHECK(p.cls.unexpected.empty());

        // Gorenstein iff the maximal cliques share one size.
        std::vector<FaceMask> cliques = maximal_cliques(p.delta);
        bool equal_sizes = true;
        for (FaceMask c : cliques)
            if (face_size(c) != face_size(cliques.front())) equal_sizes = false;
        GorensteinResult go = gorenstein_test(p.cls);
        CHECK(go.a.has_value() == equal_sizes);

        int omega = 0;
        for (FaceMask c : cliques) omega = std::max(omega, face_size(c));
        AInvariant ai = a_invariant(p.cone);
        CHECK(ai.a == -(omega + 1));

        // The all-ones point one level above the clique number is always in
        // the canonical region, Gorenstein or not.
        LatticePoint all_ones;
        all_ones.coords.assign(static_cast<size_t>(p.delta.n()) + 1, 1);
        all_ones.coords.back() = omega + 1;
        CHECK(canonical_membership(p.cone, all_ones));

        if (go.a) {
            ++gorenstein_seen;
            LatticePoint ones;
            ones.coords.assign(static_cast<size_t>(p.delta.n()) + 1, 1);
            ones.coords.back() = omega + 1;
            CHECK(ai.witness == ones);
            CHECK(canonical_membership(p.cone, ones));
        }

        // (t) is radical in dimension one, with the factoring certificate.
        TRadicalResult tr = t_radical_test(p.delta, p.cls, p.cone, 3);
        CHECK(tr.radical);
        CHECK(tr.certified_monomials.has_value());
    }
    CHECK(gorenstein_seen > 0);
}

TEST_CASE("interior-degree floor on random dim>1 instances") {
    Sm64 rng{555};
    for (int iter = 0; iter < 30; ++iter) {
        int d = rng.range(3, 4);
        Pipeline p = run(random_chain_spec(rng, 8, d));

        // Proven inclusion: every vertex and clique template occurs.
        CHECK(p.cls.missing_p.empty());
        CHECK(p.cls.missing_l.empty());

        int omega = 0;
        for (const SupportForm& f : p.cls.l_forms) {
            int size = 0;
            for (size_t j = 0; j + 1 < f.coeffs.size(); ++j)
                if (f.coeffs[j] < 0) ++size;
            omega = std::max(omega, size);
        }
        const int dm1 = d - 1;
        long long floor_level = (omega + dm1 - 1) / dm1 + (omega % dm1 == 0 ? 1 : 0);
        AInvariant ai = a_invariant(p.cone);
        CHECK(-ai.a >= floor_level);
        if (conjecture_check(p.cls).status == ConjectureStatus::confirmed)
            CHECK(-ai.a == floor_level);

        // Sanity: rank is one less than the count of primes containing t.
        ClassGroup cg = class_group(p.cls);
        CHECK(cg.free_rank ==
              static_cast<long long>(p.cls.t_forms().size()) - 1);
        CHECK(cg.torsion == 1);
    }
}
