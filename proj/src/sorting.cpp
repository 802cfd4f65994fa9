#include "sortic/sorting.hpp"

#include <unordered_set>

namespace sortic {

Monomial monomial_from_face(FaceMask f, int n) {
    Monomial m;
    m.exponents.assign(static_cast<size_t>(n), 0);
    for (int v : face_vertices(f)) m.exponents[static_cast<size_t>(v - 1)] = 1;
    return m;
}

SortedPairResult sort_pair(const Monomial& u, const Monomial& v) {
    SORTIC_REQUIRE(u.exponents.size() == v.exponents.size(),
                   "monomials live in different rings");
    const size_t n = u.exponents.size();
    Monomial a, b;
    a.exponents.assign(n, 0);
    b.exponents.assign(n, 0);
    // Deal the merged variable sequence of uv alternately, odd positions to
    // the first output.
    bool to_first = true;
    for (size_t i = 0; i < n; ++i) {
        int count = u.exponents[i] + v.exponents[i];
        for (int c = 0; c < count; ++c) {
            (to_first ? a : b).exponents[i] += 1;
            to_first = !to_first;
        }
    }
    SortedPairResult r;
    r.was_sorted = (a == u && b == v);
    r.first = std::move(a);
    r.second = std::move(b);
    return r;
}

std::pair<FaceMask, FaceMask> sort_faces(FaceMask f, FaceMask g) {
    FaceMask a = 0, b = 0;
    FaceMask both = f | g;
    FaceMask common = f & g;  // contributes one vertex to each side
    bool to_first = true;
    while (both) {
        int bit = std::countr_zero(both);
        FaceMask m = FaceMask{1} << bit;
        if (common & m) {
            a |= m;
            b |= m;
        } else {
            (to_first ? a : b) |= m;
            to_first = !to_first;
        }
        both &= both - 1;
    }
    return {a, b};
}

bool faces_sorted_unordered(FaceMask f, FaceMask g) {
    auto [a, b] = sort_faces(f, g);
    return (a == f && b == g) || (a == g && b == f);
}

SortabilityVerdict is_sortable(const SimplicialComplex& gamma) {
    std::vector<FaceMask> faces = gamma.all_faces();
    std::unordered_set<FaceMask> members(faces.begin(), faces.end());
    for (FaceMask f : faces) {
        for (FaceMask g : faces) {
            auto [a, b] = sort_faces(f, g);
            if (!members.count(a) || !members.count(b))
                return {false, std::make_pair(f, g)};
        }
    }
    return {true, std::nullopt};
}

} // namespace sortic
