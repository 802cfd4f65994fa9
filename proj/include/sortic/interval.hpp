// Unit-interval and interval simplicial complexes: recognition, construction
// from an interval/rank presentation, and recovery of that presentation.

#ifndef SORTIC_INTERVAL_HPP
#define SORTIC_INTERVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sortic/complex.hpp"

namespace sortic {

struct IntervalPart {
    int lo = 0;
    int hi = 0;
    int rank = 0;  // facets contributed are the (rank+1)-subsets of [lo,hi]

    bool operator==(const IntervalPart&) const = default;
};

// A presentation Δ = Δ_1^[r_1] ∪ ... ∪ Δ_m^[r_m] with Δ_j the simplex on the
// interval B_j = [lo_j, hi_j]. Validated invariants: 1 ≤ lo_j ≤ hi_j ≤ n,
// rank_j ≥ 1, strictly increasing lo_j, and no interval contains another.
class IntervalComplexSpec {
public:
    IntervalComplexSpec(int n, std::vector<IntervalPart> parts);

    int n() const { return n_; }
    const std::vector<IntervalPart>& parts() const { return parts_; }

    // True when the intervals are pairwise disjoint and cover [1, n].
    bool partitions_ground() const;
    // True when all contributing parts (|B_j| > rank_j) share one rank.
    std::optional<int> uniform_rank() const;

    bool operator==(const IntervalComplexSpec&) const = default;

private:
    int n_;
    std::vector<IntervalPart> parts_;
};

enum class RecognitionFailure { none, not_pure, missing_subset, void_input };

struct RecognitionVerdict {
    bool is_unit_interval = false;
    RecognitionFailure failure = RecognitionFailure::none;
    FaceMask witness_facet = 0;    // valid when failure == missing_subset
    FaceMask missing_subset = 0;   // a d-subset of the facet's span not present
    std::vector<IntervalPart> clique_intervals;  // rank = d-1, on success
};

// Pure + every facet's spanned integer interval is a clique. Degenerate
// complexes (void, {∅}) pass vacuously with no clique intervals.
RecognitionVerdict is_unit_interval(const SimplicialComplex& delta);

// Union of the pure skeleta named by the spec; parts with |B_j| ≤ rank_j
// contribute nothing and the result may be void.
SimplicialComplex build_interval_complex(const IntervalComplexSpec& spec);

// Recovers the presentation by maximal clique intervals, one rank per
// interval. Throws PreconditionError when Δ is not an interval complex or
// mixes facet sizes inside one clique interval.
IntervalComplexSpec spec_from_complex(const SimplicialComplex& delta);

std::string interval_to_string(const IntervalPart& part);

} // namespace sortic

#endif
