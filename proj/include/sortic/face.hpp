// Faces of a simplicial complex as 64-bit masks over a 1-based vertex set.
// Vertex i occupies bit i-1; the ground set size is capped at 64.

#ifndef SORTIC_FACE_HPP
#define SORTIC_FACE_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sortic/errors.hpp"

namespace sortic {

using FaceMask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int face_size(FaceMask f) { return std::popcount(f); }

inline bool face_subset(FaceMask a, FaceMask b) { return (a & ~b) == 0; }

inline bool face_contains_vertex(FaceMask f, int v) {
    return (f >> (v - 1)) & 1u;
}

inline FaceMask face_with_vertex(FaceMask f, int v) {
    return f | (FaceMask{1} << (v - 1));
}

inline FaceMask face_without_vertex(FaceMask f, int v) {
    return f & ~(FaceMask{1} << (v - 1));
}

inline FaceMask full_face(int n) {
    return n == 64 ? ~FaceMask{0} : (FaceMask{1} << n) - 1;
}

// 1-based vertices in ascending order.
std::vector<int> face_vertices(FaceMask f);

int face_min_vertex(FaceMask f);
int face_max_vertex(FaceMask f);

FaceMask face_from_vertices(std::span<const int> vertices, int n);

// Interval {lo, lo+1, ..., hi} as a mask.
FaceMask interval_mask(int lo, int hi);

// Lexicographic order on the ascending vertex sequences; the empty face is
// smallest.
bool face_lex_less(FaceMask a, FaceMask b);

std::string face_to_string(FaceMask f);

// All subsets of `ground` of the given size, in face_lex order.
std::vector<FaceMask> subsets_of_size(FaceMask ground, int size);

} // namespace sortic

#endif
