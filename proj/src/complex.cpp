#include "sortic/complex.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sortic {

namespace {

// Inclusion-maximal elements, deduplicated, in face_lex order.
std::vector<FaceMask> antichain_max(std::vector<FaceMask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> out;
    for (FaceMask f : faces) {
        bool dominated = false;
        for (FaceMask g : faces) {
            if (g != f && face_subset(f, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

std::vector<FaceMask> antichain_min(std::vector<FaceMask> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceMask> out;
    for (FaceMask f : faces) {
        bool dominated = false;
        for (FaceMask g : faces) {
            if (g != f && face_subset(g, f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

void require_desk_scale(int n, const char* op) {
    SORTIC_REQUIRE(n <= 24, std::string(op) +
                                ": ground sets beyond 24 vertices need "
                                "subset enumeration; not supported");
}

} // namespace

SimplicialComplex SimplicialComplex::build(int n,
                                           std::span<const FaceMask> raw_facets) {
    SORTIC_REQUIRE(n >= 1 && n <= kMaxVertices,
                   "vertex count must be in [1,64], got " + std::to_string(n));
    const FaceMask ground = full_face(n);
    std::vector<FaceMask> facets;
    facets.reserve(raw_facets.size());
    for (FaceMask f : raw_facets) {
        SORTIC_REQUIRE(face_subset(f, ground),
                       "facet " + face_to_string(f) + " has a vertex outside [1," +
                           std::to_string(n) + "]");
        facets.push_back(f);
    }
    return SimplicialComplex(n, antichain_max(std::move(facets)));
}

SimplicialComplex SimplicialComplex::void_complex(int n) {
    return build(n, std::span<const FaceMask>{});
}

SimplicialComplex SimplicialComplex::empty_face_complex(int n) {
    FaceMask empty = 0;
    return build(n, std::span<const FaceMask>(&empty, 1));
}

SimplicialComplex SimplicialComplex::simplex(int n, FaceMask vertices) {
    return build(n, std::span<const FaceMask>(&vertices, 1));
}

int SimplicialComplex::dim() const {
    SORTIC_REQUIRE(!is_void(), "the void complex has no dimension");
    int d = -1;
    for (FaceMask f : facets_) d = std::max(d, face_size(f) - 1);
    return d;
}

bool SimplicialComplex::pure() const {
    SORTIC_REQUIRE(!is_void(), "the void complex has no dimension");
    for (FaceMask f : facets_)
        if (face_size(f) != face_size(facets_.front())) return false;
    return true;
}

bool SimplicialComplex::contains(FaceMask f) const {
    for (FaceMask g : facets_)
        if (face_subset(f, g)) return true;
    return false;
}

std::vector<FaceMask> SimplicialComplex::all_faces() const {
    std::set<FaceMask> seen;
    for (FaceMask facet : facets_) {
        // Enumerate all subsets of the facet mask.
        FaceMask sub = facet;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
        SORTIC_REQUIRE(seen.size() <= (1u << 22), "face enumeration too large");
    }
    std::vector<FaceMask> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

FaceMask SimplicialComplex::support() const {
    FaceMask s = 0;
    for (FaceMask f : facets_) s |= f;
    return s;
}

SimplicialComplex skeleton(const SimplicialComplex& gamma, int i, bool pure) {
    SORTIC_REQUIRE(i >= 0, "skeleton index must be non-negative");
    const int size = i + 1;
    std::vector<FaceMask> out;
    for (FaceMask f : gamma.facets()) {
        if (!pure && face_size(f) <= size) {
            out.push_back(f);
        } else if (face_size(f) >= size) {
            for (FaceMask s : subsets_of_size(f, size)) out.push_back(s);
        }
    }
    if (out.empty()) return SimplicialComplex::void_complex(gamma.n());
    return SimplicialComplex::build(gamma.n(), out);
}

std::vector<FaceMask> minimal_covers(const SimplicialComplex& delta) {
    // Berge multiplication: fold facets into the running antichain of
    // minimal partial transversals.
    std::vector<FaceMask> covers = {FaceMask{0}};
    for (FaceMask f : delta.facets()) {
        std::vector<FaceMask> next;
        for (FaceMask t : covers) {
            if ((t & f) != 0) {
                next.push_back(t);
            } else {
                for (int v : face_vertices(f)) next.push_back(face_with_vertex(t, v));
            }
        }
        covers = antichain_min(std::move(next));
        if (covers.empty()) break;  // a facet was ∅: nothing can cover it
    }
    return covers;
}

SimplicialComplex independence_complex(const SimplicialComplex& delta) {
    const FaceMask ground = full_face(delta.n());
    std::vector<FaceMask> ind_facets;
    for (FaceMask c : minimal_covers(delta)) ind_facets.push_back(ground & ~c);
    if (ind_facets.empty()) return SimplicialComplex::void_complex(delta.n());
    return SimplicialComplex::build(delta.n(), ind_facets);
}

std::vector<FaceMask> minimal_nonfaces(const SimplicialComplex& gamma) {
    if (gamma.is_void()) return {FaceMask{0}};
    require_desk_scale(gamma.n(), "minimal_nonfaces");
    const int max_size = std::min(gamma.dim() + 2, gamma.n());
    std::vector<FaceMask> out;
    for (int s = 1; s <= max_size; ++s) {
        for (FaceMask cand : subsets_of_size(full_face(gamma.n()), s)) {
            if (gamma.contains(cand)) continue;
            bool minimal = true;
            for (int v : face_vertices(cand)) {
                if (!gamma.contains(face_without_vertex(cand, v))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(cand);
        }
    }
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

std::optional<int> flag_degree(const SimplicialComplex& gamma) {
    std::vector<FaceMask> nonfaces = minimal_nonfaces(gamma);
    if (nonfaces.empty()) return std::nullopt;
    const int d = face_size(nonfaces.front());
    for (FaceMask f : nonfaces)
        if (face_size(f) != d) return std::nullopt;
    return d;
}

std::vector<FaceMask> maximal_cliques(const SimplicialComplex& delta) {
    SORTIC_REQUIRE(!delta.is_void(), "maximal cliques need a non-void complex");
    SORTIC_REQUIRE(delta.pure(), "maximal cliques are defined for pure complexes");
    const int d = delta.dim() + 1;
    const int n = delta.n();
    require_desk_scale(n, "maximal_cliques");

    // Cliques of size ≥ d are reachable from facets by adding one vertex at a
    // time (every subset of a clique of size ≥ d is again a clique).
    std::set<FaceMask> cliques(delta.facets().begin(), delta.facets().end());
    std::vector<FaceMask> frontier(delta.facets().begin(), delta.facets().end());
    while (!frontier.empty()) {
        std::vector<FaceMask> next;
        for (FaceMask c : frontier) {
            for (int v = 1; v <= n; ++v) {
                if (face_contains_vertex(c, v)) continue;
                FaceMask ext = face_with_vertex(c, v);
                if (cliques.count(ext)) continue;
                bool ok = true;
                // Only the d-subsets through v are new; in a pure complex a
                // face of full size is a facet.
                for (FaceMask s : subsets_of_size(c, d - 1)) {
                    if (!delta.contains(face_with_vertex(s, v))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    cliques.insert(ext);
                    next.push_back(ext);
                }
            }
        }
        frontier = std::move(next);
    }

    std::vector<FaceMask> out;
    FaceMask covered = 0;
    for (FaceMask c : cliques) {
        bool maximal = true;
        for (FaceMask o : cliques) {
            if (o != c && face_subset(c, o)) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(c);
        covered |= c;
    }
    for (int v = 1; v <= n; ++v)
        if (!face_contains_vertex(covered, v))
            out.push_back(FaceMask{1} << (v - 1));
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

SimplicialComplex deletion(const SimplicialComplex& gamma, int v) {
    SORTIC_REQUIRE(v >= 1 && v <= gamma.n(), "vertex out of range");
    if (gamma.is_void()) return gamma;
    std::vector<FaceMask> out;
    for (FaceMask f : gamma.facets()) out.push_back(face_without_vertex(f, v));
    return SimplicialComplex::build(gamma.n(), out);
}

SimplicialComplex link(const SimplicialComplex& gamma, int v) {
    SORTIC_REQUIRE(v >= 1 && v <= gamma.n(), "vertex out of range");
    std::vector<FaceMask> out;
    for (FaceMask f : gamma.facets())
        if (face_contains_vertex(f, v)) out.push_back(face_without_vertex(f, v));
    if (out.empty()) return SimplicialComplex::void_complex(gamma.n());
    return SimplicialComplex::build(gamma.n(), out);
}

std::pair<SimplicialComplex, SimplicialComplex> deletion_link(
    const SimplicialComplex& gamma, int v) {
    return {deletion(gamma, v), link(gamma, v)};
}

} // namespace sortic
