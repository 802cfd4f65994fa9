// Incremental double description over the dual cone: the facet normals of
// cone(G) are the extreme rays of {y : <y,g> >= 0 for all g in G}. Start from
// a maximal independent generator subset (its dual cone is simplicial, rays
// given by signed cofactors), then insert the remaining generators as
// halfspace constraints in input order.

#include "sortic/cone.hpp"

#include <algorithm>
#include <string>

namespace sortic {

namespace {

constexpr size_t kMaxGenerators = 4096;

Integer det_bareiss(std::vector<IntVec> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    Integer denom = 1;
    Integer sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m[pivot][k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / denom;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// Primitive kernel vector of a (D-1) x D integer matrix of rank D-1, by
// cofactor expansion along the missing row.
IntVec kernel_vector(const std::vector<IntVec>& rows, size_t dim) {
    SORTIC_CHECK(rows.size() + 1 == dim, "kernel_vector wants D-1 rows");
    IntVec w(dim, 0);
    for (size_t k = 0; k < dim; ++k) {
        std::vector<IntVec> minor;
        minor.reserve(rows.size());
        for (const IntVec& r : rows) {
            IntVec reduced;
            reduced.reserve(dim - 1);
            for (size_t c = 0; c < dim; ++c)
                if (c != k) reduced.push_back(r[c]);
            minor.push_back(std::move(reduced));
        }
        Integer d = det_bareiss(std::move(minor));
        w[k] = (k % 2 == 0) ? d : -d;
    }
    ivec_make_primitive(w);
    return w;
}

struct Ray {
    IntVec v;
    std::vector<std::uint64_t> zeros;  // bit c set: tight on constraint c
};

void set_zero_bit(Ray& r, size_t c) { r.zeros[c / 64] |= (1ull << (c % 64)); }

size_t common_zero_count(const Ray& a, const Ray& b) {
    size_t count = 0;
    for (size_t w = 0; w < a.zeros.size(); ++w)
        count += static_cast<size_t>(std::popcount(a.zeros[w] & b.zeros[w]));
    return count;
}

} // namespace

LatticePoint lattice_point_of_face(FaceMask f, int n) {
    LatticePoint p;
    p.coords.assign(static_cast<size_t>(n + 1), 0);
    for (int v : face_vertices(f)) p.coords[static_cast<size_t>(v - 1)] = 1;
    p.coords.back() = 1;
    return p;
}

std::vector<LatticePoint> lattice_points(const SimplicialComplex& gamma) {
    std::vector<LatticePoint> out;
    for (FaceMask f : gamma.all_faces())
        out.push_back(lattice_point_of_face(f, gamma.n()));
    return out;
}

std::vector<SupportForm> cone_facets(std::span<const LatticePoint> generators) {
    SORTIC_REQUIRE(!generators.empty(), "cone needs at least one generator");
    SORTIC_REQUIRE(generators.size() <= kMaxGenerators,
                   "generator count beyond desk-scale bound");
    const size_t dim = generators[0].coords.size();
    for (const LatticePoint& g : generators)
        SORTIC_REQUIRE(g.coords.size() == dim, "generator dimension mismatch");

    // Initial simplicial subcone from a maximal independent generator subset.
    std::vector<size_t> basis;
    {
        std::vector<IntVec> stack;
        for (size_t i = 0; i < generators.size() && basis.size() < dim; ++i) {
            stack.push_back(generators[i].coords);
            if (ivec_rank(stack) == static_cast<int>(basis.size() + 1)) {
                basis.push_back(i);
            } else {
                stack.pop_back();
            }
        }
        SORTIC_REQUIRE(basis.size() == dim,
                       "cone is not full-dimensional (rank " +
                           std::to_string(stack.size()) + " of " +
                           std::to_string(dim) + ")");
    }

    // Constraint order: basis generators first, the rest in input order.
    std::vector<IntVec> constraints;
    constraints.reserve(generators.size());
    for (size_t i : basis) constraints.push_back(generators[i].coords);
    for (size_t i = 0; i < generators.size(); ++i) {
        if (std::find(basis.begin(), basis.end(), i) == basis.end())
            constraints.push_back(generators[i].coords);
    }
    const size_t words = (constraints.size() + 63) / 64;

    std::vector<Ray> rays;
    for (size_t i = 0; i < dim; ++i) {
        std::vector<IntVec> others;
        for (size_t j = 0; j < dim; ++j)
            if (j != i) others.push_back(constraints[j]);
        IntVec w = kernel_vector(others, dim);
        Integer val = ivec_dot(w, constraints[i]);
        SORTIC_CHECK(val != 0, "degenerate initial subcone");
        if (val < 0)
            for (Integer& x : w) x = -x;
        Ray r{std::move(w), std::vector<std::uint64_t>(words, 0)};
        for (size_t j = 0; j < dim; ++j)
            if (j != i) set_zero_bit(r, j);
        rays.push_back(std::move(r));
    }

    // Rank of the common tight constraints decides adjacency: the minimal
    // common face of two extreme rays is 2-dimensional exactly when that rank
    // is dim-2.
    auto adjacent = [&](const Ray& a, const Ray& b) {
        if (common_zero_count(a, b) < dim - 2) return false;
        std::vector<IntVec> tight;
        for (size_t w = 0; w < words; ++w) {
            std::uint64_t bits = a.zeros[w] & b.zeros[w];
            while (bits) {
                size_t c = w * 64 + static_cast<size_t>(std::countr_zero(bits));
                tight.push_back(constraints[c]);
                bits &= bits - 1;
            }
        }
        return ivec_rank(std::move(tight)) == static_cast<int>(dim) - 2;
    };

    for (size_t c = dim; c < constraints.size(); ++c) {
        const IntVec& g = constraints[c];
        std::vector<Integer> value(rays.size());
        for (size_t i = 0; i < rays.size(); ++i) value[i] = ivec_dot(rays[i].v, g);

        std::vector<size_t> pos, neg;
        for (size_t i = 0; i < rays.size(); ++i) {
            if (value[i] > 0) pos.push_back(i);
            else if (value[i] < 0) neg.push_back(i);
            else set_zero_bit(rays[i], c);
        }
        if (neg.empty()) continue;

        std::vector<Ray> created;
        for (size_t pi : pos) {
            for (size_t ni : neg) {
                if (!adjacent(rays[pi], rays[ni])) continue;
                IntVec w(dim);
                for (size_t k = 0; k < dim; ++k)
                    w[k] = value[pi] * rays[ni].v[k] - value[ni] * rays[pi].v[k];
                ivec_make_primitive(w);
                Ray nr{std::move(w), std::vector<std::uint64_t>(words, 0)};
                // Tight set recomputed from scratch: the combination can land
                // on constraints beyond the common ones.
                for (size_t cc = 0; cc <= c; ++cc)
                    if (ivec_dot(nr.v, constraints[cc]) == 0) set_zero_bit(nr, cc);
                created.push_back(std::move(nr));
            }
        }

        std::vector<Ray> next;
        next.reserve(pos.size() + created.size() + rays.size());
        for (size_t i = 0; i < rays.size(); ++i)
            if (value[i] >= 0) next.push_back(std::move(rays[i]));
        for (Ray& nr : created) next.push_back(std::move(nr));
        rays = std::move(next);
    }

    std::vector<SupportForm> forms;
    forms.reserve(rays.size());
    for (Ray& r : rays) forms.push_back(SupportForm{std::move(r.v)});
    std::sort(forms.begin(), forms.end(),
              [](const SupportForm& a, const SupportForm& b) {
                  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(),
                                                      b.coeffs.begin(), b.coeffs.end());
              });
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

    // Output validation: every form supports the cone and is tight on a
    // rank dim-1 generator subset.
    for (const SupportForm& f : forms) {
        std::vector<IntVec> tight;
        for (const LatticePoint& g : generators) {
            Integer v = ivec_dot(f.coeffs, g.coords);
            SORTIC_CHECK(v >= 0, "support form negative on a generator");
            if (v == 0) tight.push_back(g.coords);
        }
        SORTIC_CHECK(ivec_rank(std::move(tight)) == static_cast<int>(dim) - 1,
                     "support form not tight on a facet");
    }
    return forms;
}

ConeDescription cone_of(const SimplicialComplex& gamma) {
    ConeDescription cone;
    cone.generators = lattice_points(gamma);
    cone.facet_forms = cone_facets(cone.generators);
    cone.ambient_dim = gamma.n() + 1;
    return cone;
}

Integer evaluate(const SupportForm& form, const LatticePoint& p) {
    return ivec_dot(form.coeffs, p.coords);
}

bool cone_contains(const ConeDescription& cone, const LatticePoint& p) {
    SORTIC_REQUIRE(static_cast<int>(p.coords.size()) == cone.ambient_dim,
                   "point dimension mismatch");
    for (const SupportForm& f : cone.facet_forms)
        if (evaluate(f, p) < 0) return false;
    return true;
}

bool strictly_interior(const ConeDescription& cone, const LatticePoint& p) {
    SORTIC_REQUIRE(static_cast<int>(p.coords.size()) == cone.ambient_dim,
                   "point dimension mismatch");
    for (const SupportForm& f : cone.facet_forms)
        if (evaluate(f, p) <= 0) return false;
    return true;
}

namespace {

bool decompose_rec(const std::vector<FaceMask>& faces, size_t from,
                   std::vector<long long>& residual, long long k_left,
                   std::vector<FaceMask>& picked) {
    if (k_left == 0) {
        for (long long r : residual)
            if (r != 0) return false;
        return true;
    }
    for (long long r : residual)
        if (r > k_left) return false;  // each face adds at most 1 per slot
    for (size_t i = from; i < faces.size(); ++i) {
        FaceMask f = faces[i];
        bool fits = true;
        for (int v : face_vertices(f)) {
            if (residual[static_cast<size_t>(v - 1)] < 1) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        for (int v : face_vertices(f)) --residual[static_cast<size_t>(v - 1)];
        picked.push_back(f);
        if (decompose_rec(faces, i, residual, k_left - 1, picked)) return true;
        picked.pop_back();
        for (int v : face_vertices(f)) ++residual[static_cast<size_t>(v - 1)];
    }
    return false;
}

} // namespace

std::optional<std::vector<FaceMask>> decompose_exhaustive(
    const SimplicialComplex& gamma, const LatticePoint& p) {
    const int n = gamma.n();
    SORTIC_REQUIRE(static_cast<int>(p.coords.size()) == n + 1,
                   "point dimension mismatch");
    for (const Integer& x : p.coords)
        if (x < 0) return std::nullopt;
    long long k = to_long_checked(p.coords.back());
    std::vector<long long> residual(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        residual[static_cast<size_t>(i)] = to_long_checked(p.coords[static_cast<size_t>(i)]);

    std::vector<FaceMask> faces = gamma.all_faces();
    std::vector<FaceMask> picked;
    if (decompose_rec(faces, 0, residual, k, picked)) return picked;
    return std::nullopt;
}

std::optional<std::vector<FaceMask>> decompose_partition_greedy(
    const IntervalComplexSpec& spec, const LatticePoint& p) {
    SORTIC_REQUIRE(spec.partitions_ground(),
                   "greedy decomposition needs intervals partitioning [1,n]");
    const int r = spec.parts().front().rank;
    for (const IntervalPart& part : spec.parts())
        SORTIC_REQUIRE(part.rank == r, "greedy decomposition needs a uniform rank");
    const int n = spec.n();
    SORTIC_REQUIRE(static_cast<int>(p.coords.size()) == n + 1,
                   "point dimension mismatch");

    long long k = to_long_checked(p.coords.back());
    std::vector<long long> a(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        a[static_cast<size_t>(i)] = to_long_checked(p.coords[static_cast<size_t>(i)]);

    auto in_region = [&](long long level) {
        for (long long x : a)
            if (x < 0 || x > level) return false;
        for (const IntervalPart& part : spec.parts()) {
            long long sum = 0;
            for (int i = part.lo; i <= part.hi; ++i) sum += a[static_cast<size_t>(i - 1)];
            if (sum > static_cast<long long>(r) * level) return false;
        }
        return true;
    };

    if (k < 0 || !in_region(k)) return std::nullopt;
    std::vector<FaceMask> picked;
    while (k > 0) {
        FaceMask face = 0;
        if (k == 1) {
            for (int i = 1; i <= n; ++i)
                if (a[static_cast<size_t>(i - 1)] == 1) face = face_with_vertex(face, i);
        } else {
            for (const IntervalPart& part : spec.parts()) {
                long long dj = 0;
                for (int i = part.lo; i <= part.hi; ++i) dj += a[static_cast<size_t>(i - 1)];
                long long hj = std::max<long long>(0, dj - static_cast<long long>(r) * (k - 1));
                SORTIC_CHECK(hj <= r, "peeling target exceeds rank");
                FaceMask fj = 0;
                for (int i = part.lo; i <= part.hi; ++i)
                    if (a[static_cast<size_t>(i - 1)] == k) fj = face_with_vertex(fj, i);
                for (int i = part.lo; i <= part.hi && face_size(fj) < hj; ++i) {
                    long long x = a[static_cast<size_t>(i - 1)];
                    if (x > 0 && x < k) fj = face_with_vertex(fj, i);
                }
                SORTIC_CHECK(face_size(fj) >= hj, "not enough positive slots to peel");
                SORTIC_CHECK(face_size(fj) <= r, "peeled set exceeds independence bound");
                face |= fj;
            }
        }
        for (int v : face_vertices(face)) --a[static_cast<size_t>(v - 1)];
        --k;
        SORTIC_CHECK(in_region(k), "residual left the cone during peeling");
        picked.push_back(face);
    }
    for (long long x : a)
        SORTIC_CHECK(x == 0, "peeling finished with leftover exponents");
    std::sort(picked.begin(), picked.end(), face_lex_less);
    return picked;
}

} // namespace sortic
