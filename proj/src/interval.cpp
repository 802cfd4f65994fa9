#include "sortic/interval.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace sortic {

IntervalComplexSpec::IntervalComplexSpec(int n, std::vector<IntervalPart> parts)
    : n_(n), parts_(std::move(parts)) {
    SORTIC_REQUIRE(n_ >= 1 && n_ <= kMaxVertices, "vertex count out of range");
    SORTIC_REQUIRE(!parts_.empty(), "interval spec needs at least one part");
    for (const IntervalPart& p : parts_) {
        SORTIC_REQUIRE(1 <= p.lo && p.lo <= p.hi && p.hi <= n_,
                       "interval " + interval_to_string(p) + " out of range");
        SORTIC_REQUIRE(p.rank >= 1, "interval rank must be positive");
    }
    for (size_t i = 1; i < parts_.size(); ++i) {
        SORTIC_REQUIRE(parts_[i - 1].lo < parts_[i].lo,
                       "interval minima must be strictly increasing");
    }
    for (size_t i = 0; i < parts_.size(); ++i) {
        for (size_t j = 0; j < parts_.size(); ++j) {
            if (i == j) continue;
            bool nested = parts_[j].lo <= parts_[i].lo && parts_[i].hi <= parts_[j].hi;
            SORTIC_REQUIRE(!nested, "interval " + interval_to_string(parts_[i]) +
                                        " is contained in " +
                                        interval_to_string(parts_[j]));
        }
    }
}

bool IntervalComplexSpec::partitions_ground() const {
    int expected = 1;
    for (const IntervalPart& p : parts_) {
        if (p.lo != expected) return false;
        expected = p.hi + 1;
    }
    return expected == n_ + 1;
}

std::optional<int> IntervalComplexSpec::uniform_rank() const {
    std::optional<int> r;
    for (const IntervalPart& p : parts_) {
        if (p.hi - p.lo + 1 <= p.rank) continue;  // void contribution
        if (r && *r != p.rank) return std::nullopt;
        r = p.rank;
    }
    return r;
}

std::string interval_to_string(const IntervalPart& part) {
    return "[" + std::to_string(part.lo) + "," + std::to_string(part.hi) + "]";
}

RecognitionVerdict is_unit_interval(const SimplicialComplex& delta) {
    RecognitionVerdict v;
    if (delta.is_void() || delta.facets() == std::vector<FaceMask>{0}) {
        v.is_unit_interval = true;
        return v;
    }
    if (!delta.pure()) {
        v.failure = RecognitionFailure::not_pure;
        FaceMask smallest = delta.facets().front();
        for (FaceMask f : delta.facets())
            if (face_size(f) < face_size(smallest)) smallest = f;
        v.witness_facet = smallest;
        return v;
    }
    const int d = delta.dim() + 1;
    for (FaceMask f : delta.facets()) {
        FaceMask span = interval_mask(face_min_vertex(f), face_max_vertex(f));
        for (FaceMask s : subsets_of_size(span, d)) {
            if (!delta.contains(s)) {
                v.failure = RecognitionFailure::missing_subset;
                v.witness_facet = f;
                v.missing_subset = s;
                return v;
            }
        }
    }
    v.is_unit_interval = true;
    for (FaceMask c : maximal_cliques(delta)) {
        if (face_size(c) < d) continue;  // uncovered vertices
        v.clique_intervals.push_back(
            {face_min_vertex(c), face_max_vertex(c), d - 1});
    }
    std::sort(v.clique_intervals.begin(), v.clique_intervals.end(),
              [](const IntervalPart& a, const IntervalPart& b) { return a.lo < b.lo; });
    return v;
}

SimplicialComplex build_interval_complex(const IntervalComplexSpec& spec) {
    std::vector<FaceMask> facets;
    for (const IntervalPart& p : spec.parts()) {
        if (p.hi - p.lo + 1 <= p.rank) continue;
        for (FaceMask f : subsets_of_size(interval_mask(p.lo, p.hi), p.rank + 1))
            facets.push_back(f);
    }
    if (facets.empty()) return SimplicialComplex::void_complex(spec.n());
    return SimplicialComplex::build(spec.n(), facets);
}

IntervalComplexSpec spec_from_complex(const SimplicialComplex& delta) {
    SORTIC_REQUIRE(!delta.is_void() && !(delta.facets() == std::vector<FaceMask>{0}),
                   "degenerate complex has no interval presentation");
    const int n = delta.n();

    // Group facets by size and check the defining property: every facet's
    // spanned interval is filled with same-size facets.
    std::map<int, std::vector<FaceMask>> by_size;
    for (FaceMask f : delta.facets()) by_size[face_size(f)].push_back(f);
    for (auto& [size, facets] : by_size) {
        for (FaceMask f : facets) {
            FaceMask span = interval_mask(face_min_vertex(f), face_max_vertex(f));
            for (FaceMask s : subsets_of_size(span, size)) {
                bool is_facet = std::find(facets.begin(), facets.end(), s) != facets.end();
                SORTIC_REQUIRE(is_facet,
                               "not an interval complex: facet " + face_to_string(f) +
                                   " spans " + face_to_string(span) + " but " +
                                   face_to_string(s) + " is not a facet");
            }
        }
    }

    // Per facet size, the maximal intervals all of whose size-subsets are
    // facets of that size.
    std::vector<IntervalPart> parts;
    for (auto& [size, facets] : by_size) {
        auto valid = [&, size = size](int lo, int hi) {
            if (hi - lo + 1 < size) return false;
            for (FaceMask s : subsets_of_size(interval_mask(lo, hi), size))
                if (std::find(facets.begin(), facets.end(), s) == facets.end())
                    return false;
            return true;
        };
        std::vector<IntervalPart> found;
        for (int lo = 1; lo <= n; ++lo) {
            int best = -1;
            for (int hi = lo + size - 1; hi <= n; ++hi)
                if (valid(lo, hi)) best = hi;
            if (best >= 0) found.push_back({lo, best, size - 1});
        }
        // Keep inclusion-maximal intervals.
        for (size_t i = 0; i < found.size(); ++i) {
            bool nested = false;
            for (size_t j = 0; j < found.size(); ++j)
                if (i != j && found[j].lo <= found[i].lo && found[i].hi <= found[j].hi)
                    nested = true;
            if (!nested) parts.push_back(found[i]);
        }
    }
    std::sort(parts.begin(), parts.end(),
              [](const IntervalPart& a, const IntervalPart& b) { return a.lo < b.lo; });
    return IntervalComplexSpec(n, parts);
}

} // namespace sortic
