#include "sortic/face.hpp"

#include <algorithm>

namespace sortic {

std::vector<int> face_vertices(FaceMask f) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(face_size(f)));
    while (f) {
        int bit = std::countr_zero(f);
        out.push_back(bit + 1);
        f &= f - 1;
    }
    return out;
}

int face_min_vertex(FaceMask f) {
    SORTIC_REQUIRE(f != 0, "empty face has no minimum vertex");
    return std::countr_zero(f) + 1;
}

int face_max_vertex(FaceMask f) {
    SORTIC_REQUIRE(f != 0, "empty face has no maximum vertex");
    return 64 - std::countl_zero(f);
}

FaceMask face_from_vertices(std::span<const int> vertices, int n) {
    SORTIC_REQUIRE(n >= 1 && n <= kMaxVertices, "vertex count out of range");
    FaceMask f = 0;
    for (int v : vertices) {
        SORTIC_REQUIRE(v >= 1 && v <= n, "vertex " + std::to_string(v) +
                                             " out of range [1," +
                                             std::to_string(n) + "]");
        f = face_with_vertex(f, v);
    }
    return f;
}

FaceMask interval_mask(int lo, int hi) {
    SORTIC_REQUIRE(1 <= lo && lo <= hi && hi <= kMaxVertices,
                   "bad interval bounds");
    return full_face(hi) & ~full_face(lo - 1);
}

bool face_lex_less(FaceMask a, FaceMask b) {
    if (a == b) return false;
    // Compare ascending vertex sequences; the first differing vertex decides,
    // and a proper prefix is smaller.
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0;
}

std::string face_to_string(FaceMask f) {
    std::string s = "{";
    bool first = true;
    for (int v : face_vertices(f)) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    s += "}";
    return s;
}

std::vector<FaceMask> subsets_of_size(FaceMask ground, int size) {
    std::vector<int> verts = face_vertices(ground);
    int m = static_cast<int>(verts.size());
    std::vector<FaceMask> out;
    if (size < 0 || size > m) return out;
    if (size == 0) return {FaceMask{0}};
    std::vector<int> idx(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        FaceMask f = 0;
        for (int i : idx) f = face_with_vertex(f, verts[static_cast<size_t>(i)]);
        out.push_back(f);
        int i = size - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - size + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < size; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

} // namespace sortic
