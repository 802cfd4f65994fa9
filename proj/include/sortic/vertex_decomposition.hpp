// Vertex decomposability: generic memoized search with shedding trees, the
// constructive shedding order for interval presentations, Cohen-Macaulay
// classification, and linear quotients for the cover ideal.

#ifndef SORTIC_VERTEX_DECOMPOSITION_HPP
#define SORTIC_VERTEX_DECOMPOSITION_HPP

#include <memory>
#include <optional>
#include <vector>

#include "sortic/complex.hpp"
#include "sortic/interval.hpp"

namespace sortic {

// Leaves are simplices (void and {∅} included); inner nodes record the shed
// vertex and both children. Every inner node satisfies the shedding
// condition: each facet of the deletion is a facet of the node complex.
struct SheddingTree {
    SimplicialComplex complex;
    std::optional<int> shed;
    std::unique_ptr<SheddingTree> del_child;
    std::unique_ptr<SheddingTree> link_child;

    explicit SheddingTree(SimplicialComplex c) : complex(std::move(c)) {}

    int node_count() const;
};

// Every facet of Del_Γ(v) is a facet of Γ.
bool is_shedding_vertex(const SimplicialComplex& gamma, int v);

// Memoized exponential search, smallest shedding vertex with decomposable
// children first. Ground sets are capped at 10 vertices.
std::optional<SheddingTree> is_vertex_decomposable(const SimplicialComplex& gamma);

struct SheddingReplay {
    std::vector<int> order;  // shed vertices in preorder over the replay tree
    bool verified = false;   // every step passed the shedding check
    long long nodes = 0;     // replay tree size, leaves included
};

// Replays the constructive decomposition for an interval presentation: take
// the first interval still longer than its rank, shed its maximum vertex,
// recurse on both the deletion and the link presentations. Each shed is
// verified against the actual independence complex.
SheddingReplay interval_shedding_order(const IntervalComplexSpec& spec);

struct CmStatus {
    bool pure_ind = false;
    bool unmixed = false;
    bool cm = false;
};

// Unmixedness of the facet ideal (equal-size minimal covers), equivalently
// purity of Ind(Δ); for interval complexes this decides Cohen-Macaulayness.
CmStatus cm_status(const SimplicialComplex& delta);

// An ordering of the minimal-cover monomials with linear colon quotients, by
// greedy extension with backtracking. nullopt when no order exists.
std::optional<std::vector<FaceMask>> dual_linear_quotients(
    const SimplicialComplex& delta);

} // namespace sortic

#endif
