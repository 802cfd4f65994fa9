#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortic/groebner.hpp"
#include "sortic/interval.hpp"

using namespace sortic;

namespace {

FaceMask face(std::initializer_list<int> verts, int n) {
    std::vector<int> v(verts);
    return face_from_vertices(v, n);
}

SimplicialComplex make(int n, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<FaceMask> masks;
    for (auto f : facets) masks.push_back(face(f, n));
    return SimplicialComplex::build(n, masks);
}

const SimplicialComplex PATH = make(3, {{1, 2}, {2, 3}});
const SimplicialComplex K3 = make(3, {{1, 2}, {1, 3}, {2, 3}});
const SimplicialComplex TET4 =
    make(4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
const SimplicialComplex TWIN3 = make(6, {{1, 2, 3}, {4, 5, 6}});

std::vector<FaceMask> faces_of_ind(const SimplicialComplex& delta) {
    return independence_complex(delta).all_faces();
}

} // namespace

TEST_CASE("sorting binomials") {
    // Path graph: the single relation (x1 x3 t) * t = (x1 t)(x3 t).
    std::vector<SortingBinomial> path = sorting_binomials(faces_of_ind(PATH));
    REQUIRE(path.size() == 1);
    CHECK(path[0].left_first == 0);
    CHECK(path[0].left_second == face({1, 3}, 3));
    CHECK(path[0].right_first == face({1}, 3));
    CHECK(path[0].right_second == face({3}, 3));

    CHECK(sorting_binomials(faces_of_ind(K3)).empty());

    // The full simplex on two vertices has the analogous single relation.
    std::vector<FaceMask> simplex2{0, face({1}, 2), face({2}, 2), face({1, 2}, 2)};
    std::vector<SortingBinomial> s2 = sorting_binomials(simplex2);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].left_first == 0);
    CHECK(s2[0].left_second == face({1, 2}, 2));

    // Balance: both sides multiply to the same monomial.
    for (const SortingBinomial& b : path) {
        CHECK((b.left_first | b.left_second) == (b.right_first | b.right_second));
        CHECK((b.left_first & b.left_second) == (b.right_first & b.right_second));
    }

    // Not closed under sorting: reject.
    std::vector<FaceMask> open{face({3}, 3), face({1, 2}, 3)};
    CHECK_THROWS_AS(sorting_binomials(open), PreconditionError);
}

TEST_CASE("standard monomial counting") {
    StandardCountResult p2 = standard_count_check(faces_of_ind(PATH), 3, 2);
    CHECK(p2.sorted_count == 14);
    CHECK(p2.semigroup_count == 14);
    CHECK(p2.pass);

    StandardCountResult k2 = standard_count_check(faces_of_ind(K3), 3, 2);
    CHECK(k2.sorted_count == 10);
    CHECK(k2.semigroup_count == 10);
    CHECK(k2.pass);

    // Degree one is a bijection by definition.
    StandardCountResult p1 = standard_count_check(faces_of_ind(PATH), 3, 1);
    CHECK(p1.sorted_count == 5);
    CHECK(p1.semigroup_count == 5);

    for (int r = 2; r <= 3; ++r) {
        CHECK(standard_count_check(faces_of_ind(TET4), 4, r).pass);
        CHECK(standard_count_check(faces_of_ind(TWIN3), 6, r).pass);
    }
}

TEST_CASE("exchange condition holds for skeleton ideals") {
    CHECK(l_exchange_check(TET4, 1, 2).holds);
    CHECK(l_exchange_check(TWIN3, 1, 2).holds);
    CHECK(l_exchange_check(PATH, 0, 2).holds);
    CHECK(l_exchange_check(TET4, 0, 2).holds);
    CHECK(l_exchange_check(TET4, 1, 3).holds);
    CHECK_THROWS_AS(l_exchange_check(PATH, 3, 2), PreconditionError);
}

TEST_CASE("exchange condition fails outside the family") {
    // Sortable but not derived from a unit-interval complex: two crossing
    // pairs admit no swap at position 1.
    std::vector<FaceMask> gens{face({1, 3}, 4), face({2, 4}, 4)};
    ExchangeResult r = l_exchange_check_generators(gens, 4, 2);
    CHECK(!r.holds);
    REQUIRE(r.violation.has_value());
    CHECK(r.violation->q == 1);

    // Exhaustive hunt over sorting-closed edge sets on 4 vertices: every
    // violation involves the crossing pair above.
    std::vector<FaceMask> all = subsets_of_size(full_face(4), 2);
    long long violations = 0;
    for (std::uint64_t pick = 1; pick < (1ull << all.size()); ++pick) {
        std::vector<FaceMask> chosen;
        for (size_t i = 0; i < all.size(); ++i)
            if (pick & (1ull << i)) chosen.push_back(all[i]);
        bool closed = true;
        for (FaceMask f : chosen) {
            for (FaceMask g : chosen) {
                auto [a, b] = sort_faces(f, g);
                bool ina = false, inb = false;
                for (FaceMask h : chosen) {
                    if (h == a) ina = true;
                    if (h == b) inb = true;
                }
                if (!ina || !inb) {
                    closed = false;
                    break;
                }
            }
            if (!closed) break;
        }
        if (!closed) continue;
        ExchangeResult er = l_exchange_check_generators(chosen, 4, 2);
        if (!er.holds) {
            ++violations;
            bool has13 = false, has24 = false;
            for (FaceMask f : chosen) {
                if (f == face({1, 3}, 4)) has13 = true;
                if (f == face({2, 4}, 4)) has24 = true;
            }
            CHECK(has13);
            CHECK(has24);
        }
    }
    CHECK(violations == 4);
}

TEST_CASE("count checks pass whenever the face set is sortable") {
    // Exhaustive over pure complexes on up to 4 vertices: whenever the
    // independence complex is sortable, the standard-monomial counts match.
    for (int n = 2; n <= 4; ++n) {
        for (int d = 2; d <= n; ++d) {
            std::vector<FaceMask> all = subsets_of_size(full_face(n), d);
            for (std::uint64_t pick = 1; pick < (1ull << all.size()); ++pick) {
                std::vector<FaceMask> chosen;
                for (size_t i = 0; i < all.size(); ++i)
                    if (pick & (1ull << i)) chosen.push_back(all[i]);
                SimplicialComplex gamma = independence_complex(
                    SimplicialComplex::build(n, chosen));
                if (!is_sortable(gamma).sortable) continue;
                std::vector<FaceMask> faces = gamma.all_faces();
                CHECK(standard_count_check(faces, n, 2).pass);
                CHECK(standard_count_check(faces, n, 3).pass);
            }
        }
    }
}

TEST_CASE("rees fibers are connected by the quadratic moves") {
    ReesFiberReport path = rees_fiber_connectivity(PATH, 1, 3);
    CHECK(path.all_connected);

    ReesFiberReport tet = rees_fiber_connectivity(TET4, 1, 3);
    CHECK(tet.all_connected);
    bool some_fat_fiber = false;
    for (const FiberVerdict& f : tet.fibers) {
        CHECK(f.connected);
        if (f.fiber_size >= 2) some_fat_fiber = true;
    }
    CHECK(some_fat_fiber);

    CHECK(rees_fiber_connectivity(TWIN3, 1, 3).all_connected);
    CHECK(rees_fiber_connectivity(TWIN3, 2, 3).all_connected);
    CHECK(rees_fiber_connectivity(K3, 0, 3).all_connected);
}
