// Lattice model of the toric ring of a complex: one generator p_F per face F
// (the indicator vector of F with a trailing 1), exact facet enumeration of
// the generated cone by the double description method, membership tests, and
// semigroup decomposition.

#ifndef SORTIC_CONE_HPP
#define SORTIC_CONE_HPP

#include <optional>
#include <span>
#include <vector>

#include "sortic/complex.hpp"
#include "sortic/integer.hpp"
#include "sortic/interval.hpp"

namespace sortic {

struct LatticePoint {
    IntVec coords;  // length n+1, last slot is the t-degree

    bool operator==(const LatticePoint&) const = default;
};

struct SupportForm {
    IntVec coeffs;  // primitive integer functional, length n+1

    bool operator==(const SupportForm&) const = default;
};

struct ConeDescription {
    std::vector<LatticePoint> generators;
    std::vector<SupportForm> facet_forms;
    int ambient_dim = 0;
};

LatticePoint lattice_point_of_face(FaceMask f, int n);

// One point per face of Γ, including p_∅ = e_{n+1}; face_lex order.
std::vector<LatticePoint> lattice_points(const SimplicialComplex& gamma);

// The complete irredundant set of primitive facet normals of cone(generators),
// sorted lexicographically by coefficient vector. Requires a full-dimensional
// cone; throws PreconditionError reporting the rank otherwise.
std::vector<SupportForm> cone_facets(std::span<const LatticePoint> generators);

ConeDescription cone_of(const SimplicialComplex& gamma);

Integer evaluate(const SupportForm& form, const LatticePoint& p);

// All facet forms ≥ 0 at p.
bool cone_contains(const ConeDescription& cone, const LatticePoint& p);
// All facet forms strictly positive at p.
bool strictly_interior(const ConeDescription& cone, const LatticePoint& p);

// Multiset of faces of Γ whose lattice points sum to p, found by complete
// backtracking (the t-degree of p bounds the multiset size). Returns nullopt
// when no decomposition exists.
std::optional<std::vector<FaceMask>> decompose_exhaustive(
    const SimplicialComplex& gamma, const LatticePoint& p);

// The peeling construction for a spec whose intervals partition [1,n] with a
// uniform rank: per interval, take the coordinates equal to the t-degree plus
// enough positive ones to reach h_j = max(0, d_j - r(k-1)). Verifies that
// every residual stays in the inequality description of the cone.
std::optional<std::vector<FaceMask>> decompose_partition_greedy(
    const IntervalComplexSpec& spec, const LatticePoint& p);

} // namespace sortic

#endif
