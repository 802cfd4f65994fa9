// Desk-scale verification surrogates for the quadratic Gröbner structure of
// the toric and Rees presentations: sorting binomials, standard-monomial
// counting against the semigroup, the exchange condition on standard tuples,
// and fiber connectivity under the quadratic moves.

#ifndef SORTIC_GROEBNER_HPP
#define SORTIC_GROEBNER_HPP

#include <optional>
#include <vector>

#include "sortic/complex.hpp"
#include "sortic/integer.hpp"
#include "sortic/sorting.hpp"

namespace sortic {

struct SortingBinomial {
    FaceMask left_first = 0;   // unsorted unordered pair
    FaceMask left_second = 0;
    FaceMask right_first = 0;  // its sort
    FaceMask right_second = 0;
};

// One binomial per unsorted unordered pair of M (sort differs as a multiset).
// M must be closed under sorting; throws PreconditionError with the witness
// pair otherwise.
std::vector<SortingBinomial> sorting_binomials(const std::vector<FaceMask>& m);

struct StandardCountResult {
    long long sorted_count = 0;     // pairwise-sorted size-r multisets of M
    long long semigroup_count = 0;  // distinct products of size-r multisets
    bool pass = false;
};

// The quadratic initial-ideal claim at degree r: standard monomials
// (pairwise-sorted multisets) must biject with semigroup elements.
StandardCountResult standard_count_check(const std::vector<FaceMask>& m, int n,
                                         int r);

struct ExchangeWitness {
    std::vector<FaceMask> u_tuple;
    std::vector<FaceMask> v_tuple;
    int q = 0;
};

struct ExchangeResult {
    bool holds = false;
    std::optional<ExchangeWitness> violation;
    long long pairs_examined = 0;
};

// The exchange condition on pairwise-sorted N-tuples from the generators of
// the facet ideal of Ind(Δ)^[t]: whenever the degree vectors first differ at
// position q (u smaller), some u_k admits a swap x_q u_k / x_j landing back in
// the ideal. Exhaustive over all ordered tuple pairs, N ≤ 3.
ExchangeResult l_exchange_check(const SimplicialComplex& delta, int t, int cap_n);

// Same check for an arbitrary equigenerated squarefree monomial set (used to
// hunt for violations outside the independence-complex family).
ExchangeResult l_exchange_check_generators(const std::vector<FaceMask>& gens,
                                           int n, int cap_n);

struct FiberVerdict {
    IntVec multidegree;      // image exponent vector with trailing y-degree
    long long fiber_size = 0;
    bool connected = false;
};

struct ReesFiberReport {
    std::vector<FiberVerdict> fibers;  // only fibers of size >= 2
    long long total_monomials = 0;
    bool all_connected = false;
};

// Fibers of the Rees presentation of the facet ideal of Ind(Δ)^[t] in all
// bidegrees (s, r) with s + r <= degree_bound <= 5, connected by sorting
// moves on y-pairs and x/y exchange moves.
ReesFiberReport rees_fiber_connectivity(const SimplicialComplex& delta, int t,
                                        int degree_bound);

} // namespace sortic

#endif
