// The sorting operator on monomial pairs: merge the two exponent sequences in
// weakly increasing variable order, then deal the merged sequence alternately
// to the first and second output. Squarefree inputs stay squarefree, so the
// operator restricts to pairs of faces.

#ifndef SORTIC_SORTING_HPP
#define SORTIC_SORTING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sortic/complex.hpp"

namespace sortic {

struct Monomial {
    std::vector<int> exponents;  // index i-1 holds deg_{x_i}

    int degree() const {
        int d = 0;
        for (int e : exponents) d += e;
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

Monomial monomial_from_face(FaceMask f, int n);

struct SortedPairResult {
    Monomial first;
    Monomial second;
    bool was_sorted = false;
};

SortedPairResult sort_pair(const Monomial& u, const Monomial& v);

// Face specialization; returns (F', G') with |F'| ≥ |G'|.
std::pair<FaceMask, FaceMask> sort_faces(FaceMask f, FaceMask g);

inline bool faces_sorted_as_pair(FaceMask f, FaceMask g) {
    auto [fs, gs] = sort_faces(f, g);
    return fs == f && gs == g;
}

// Whether the unordered pair {f, g} equals its sort as a multiset.
bool faces_sorted_unordered(FaceMask f, FaceMask g);

struct SortabilityVerdict {
    bool sortable = false;
    // First failing ordered pair, faces in face_lex enumeration order.
    std::optional<std::pair<FaceMask, FaceMask>> witness;
};

// Sortability of the face monomial set of Γ: every ordered pair of faces must
// sort into a pair of faces.
SortabilityVerdict is_sortable(const SimplicialComplex& gamma);

} // namespace sortic

#endif
