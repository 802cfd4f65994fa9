// Simplicial complexes stored as facet antichains over [n]. The void complex
// (no faces at all) and the complex {∅} (single empty facet) are distinct:
// the former has an empty facet list, the latter a single empty mask.

#ifndef SORTIC_COMPLEX_HPP
#define SORTIC_COMPLEX_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sortic/face.hpp"

namespace sortic {

class SimplicialComplex {
public:
    // Keeps the inclusion-maximal elements of `raw_facets`; duplicates are
    // collapsed silently.
    static SimplicialComplex build(int n, std::span<const FaceMask> raw_facets);

    static SimplicialComplex void_complex(int n);
    static SimplicialComplex empty_face_complex(int n);  // {∅}
    static SimplicialComplex simplex(int n, FaceMask vertices);

    int n() const { return n_; }
    const std::vector<FaceMask>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    // One facet that is itself a simplex face set: void, {∅}, or ⟨F⟩.
    bool is_simplex() const { return facets_.size() <= 1; }

    // dim ∅-complex = -1; undefined (error) for the void complex.
    int dim() const;
    bool pure() const;

    bool contains(FaceMask f) const;

    // All faces, in face_lex order. Exponential in facet sizes; intended for
    // desk-scale ground sets.
    std::vector<FaceMask> all_faces() const;
    // Vertices lying in at least one facet.
    FaceMask support() const;

    bool operator==(const SimplicialComplex& other) const {
        return n_ == other.n_ && facets_ == other.facets_;
    }

private:
    SimplicialComplex(int n, std::vector<FaceMask> facets)
        : n_(n), facets_(std::move(facets)) {}

    int n_ = 0;
    std::vector<FaceMask> facets_;
};

// Γ^(i) (pure = false): all faces of dimension ≤ i.
// Γ^[i] (pure = true): generated by the faces of dimension exactly i; may be
// void.
SimplicialComplex skeleton(const SimplicialComplex& gamma, int i, bool pure);

// Ind(Δ) = { D ⊆ [n] : D contains no facet of Δ }, as a facet antichain.
SimplicialComplex independence_complex(const SimplicialComplex& delta);

// Inclusion-minimal non-faces, in face_lex order.
std::vector<FaceMask> minimal_nonfaces(const SimplicialComplex& gamma);

// d if all minimal non-faces share cardinality d (and there is at least one);
// nullopt otherwise.
std::optional<int> flag_degree(const SimplicialComplex& gamma);

// Maximal cliques of a pure (d-1)-dimensional complex: inclusion-maximal
// members of {singletons} ∪ {C : |C| ≥ d, every d-subset of C is a facet}.
// For d = 2 this is the usual graph notion, isolated vertices included.
std::vector<FaceMask> maximal_cliques(const SimplicialComplex& delta);

// (Del_Γ(v), Lk_Γ(v)).
std::pair<SimplicialComplex, SimplicialComplex> deletion_link(
    const SimplicialComplex& gamma, int v);

SimplicialComplex deletion(const SimplicialComplex& gamma, int v);
SimplicialComplex link(const SimplicialComplex& gamma, int v);

// Minimal transversals of the facet family (minimal vertex covers).
std::vector<FaceMask> minimal_covers(const SimplicialComplex& delta);

} // namespace sortic

#endif
