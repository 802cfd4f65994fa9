#include "sortic/vertex_decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sortic {

int SheddingTree::node_count() const {
    int c = 1;
    if (del_child) c += del_child->node_count();
    if (link_child) c += link_child->node_count();
    return c;
}

bool is_shedding_vertex(const SimplicialComplex& gamma, int v) {
    SimplicialComplex del = deletion(gamma, v);
    for (FaceMask f : del.facets()) {
        if (std::find(gamma.facets().begin(), gamma.facets().end(), f) ==
            gamma.facets().end())
            return false;
    }
    return true;
}

namespace {

using MemoKey = std::vector<FaceMask>;

// nullopt: not decomposable. 0: leaf (simplex). v >= 1: shedding vertex.
using Memo = std::map<MemoKey, std::optional<int>>;

std::optional<int> decide(const SimplicialComplex& gamma, Memo& memo) {
    MemoKey key = gamma.facets();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::optional<int> result;
    if (gamma.is_simplex()) {
        result = 0;
    } else {
        for (int v : face_vertices(gamma.support())) {
            if (!is_shedding_vertex(gamma, v)) continue;
            if (decide(deletion(gamma, v), memo) &&
                decide(link(gamma, v), memo)) {
                result = v;
                break;
            }
        }
    }
    memo[key] = result;
    return result;
}

std::unique_ptr<SheddingTree> build_tree(const SimplicialComplex& gamma,
                                         Memo& memo) {
    std::optional<int> v = decide(gamma, memo);
    SORTIC_CHECK(v.has_value(), "building a tree for an undecomposable complex");
    auto node = std::make_unique<SheddingTree>(gamma);
    if (*v >= 1) {
        node->shed = *v;
        node->del_child = build_tree(deletion(gamma, *v), memo);
        node->link_child = build_tree(link(gamma, *v), memo);
    }
    return node;
}

} // namespace

std::optional<SheddingTree> is_vertex_decomposable(const SimplicialComplex& gamma) {
    SORTIC_REQUIRE(gamma.n() <= 10,
                   "vertex decomposability search is capped at 10 vertices");
    Memo memo;
    if (!decide(gamma, memo)) return std::nullopt;
    std::unique_ptr<SheddingTree> tree = build_tree(gamma, memo);
    return std::move(*tree);
}

namespace {

// Replay state: the facet antichain of the current Δ plus the vertices that
// have been shed so far (each excluded by a singleton constraint). The
// independence complex is taken over the alive ground set, and intervals are
// contiguous runs of alive vertices.
struct DeltaNode {
    int n = 0;
    std::vector<FaceMask> facets;  // antichain, none touching `forbidden`
    FaceMask forbidden = 0;
};

// Singleton facets are equivalent to exclusions; keep them in `forbidden` so
// the remaining facets all have at least two vertices.
void normalize_node(DeltaNode& node) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<FaceMask> keep;
        for (FaceMask f : node.facets) {
            FaceMask alive = f & ~node.forbidden;
            SORTIC_CHECK(alive == f, "facet touches a shed vertex");
            if (face_size(f) == 1) {
                node.forbidden |= f;
                changed = true;
            } else {
                keep.push_back(f);
            }
        }
        node.facets = std::move(keep);
    }
    std::sort(node.facets.begin(), node.facets.end(), face_lex_less);
}

SimplicialComplex node_delta(const DeltaNode& node) {
    std::vector<FaceMask> facets = node.facets;
    for (int v : face_vertices(node.forbidden))
        facets.push_back(FaceMask{1} << (v - 1));
    if (facets.empty()) return SimplicialComplex::void_complex(node.n);
    return SimplicialComplex::build(node.n, facets);
}

bool contains_face(const std::vector<FaceMask>& facets, FaceMask f) {
    for (FaceMask g : facets)
        if (face_subset(f, g)) return true;
    return false;
}

// The maximal interval presentation of the node: per facet size s, the
// inclusion-maximal runs of alive vertices whose s-subsets are all faces and
// which contain at least one size-s facet. Sorted by (min, max).
std::vector<std::pair<FaceMask, int>> extract_parts(const DeltaNode& node) {
    std::vector<int> alive = face_vertices(full_face(node.n) & ~node.forbidden);
    std::set<int> sizes;
    for (FaceMask f : node.facets) sizes.insert(face_size(f));

    std::vector<std::pair<FaceMask, int>> parts;
    for (int s : sizes) {
        std::vector<FaceMask> candidates;
        for (size_t a = 0; a < alive.size(); ++a) {
            FaceMask run = 0;
            FaceMask best = 0;
            for (size_t b = a; b < alive.size(); ++b) {
                run = face_with_vertex(run, alive[b]);
                if (face_size(run) < s) continue;
                bool valid = true;
                bool has_facet = false;
                for (FaceMask sub : subsets_of_size(run, s)) {
                    if (!contains_face(node.facets, sub)) {
                        valid = false;
                        break;
                    }
                }
                if (!valid) break;  // runs only lose validity as they grow
                for (FaceMask f : node.facets)
                    if (face_size(f) == s && face_subset(f, run)) has_facet = true;
                if (has_facet) best = run;
            }
            if (best) candidates.push_back(best);
        }
        for (size_t i = 0; i < candidates.size(); ++i) {
            bool nested = false;
            for (size_t j = 0; j < candidates.size(); ++j)
                if (i != j && face_subset(candidates[i], candidates[j]))
                    nested = true;
            if (!nested) parts.push_back({candidates[i], s - 1});
        }
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (face_min_vertex(a.first) != face_min_vertex(b.first))
            return face_min_vertex(a.first) < face_min_vertex(b.first);
        if (face_max_vertex(a.first) != face_max_vertex(b.first))
            return face_max_vertex(a.first) < face_max_vertex(b.first);
        return a.second < b.second;
    });
    return parts;
}

// Shedding the maximum of the first saturated interval works as long as the
// node stays in the interval class. Absorption between parts of different
// ranks can push a child outside it (e.g. the star ⟨{4,5},{4,6}⟩ with {5,6}
// absorbed away earlier); at such nodes no interval maximum sheds, and we
// fall back to the smallest vertex that sheds with decomposable children.
int choose_shed_vertex(const DeltaNode& node, const SimplicialComplex& gamma) {
    for (const auto& [mask, rank] : extract_parts(node)) {
        int i = face_max_vertex(mask);
        if (is_shedding_vertex(gamma, i)) return i;
    }
    for (int v : face_vertices(gamma.support())) {
        if (!is_shedding_vertex(gamma, v)) continue;
        if (is_vertex_decomposable(deletion(gamma, v)) &&
            is_vertex_decomposable(link(gamma, v)))
            return v;
    }
    throw InternalError("no verified shedding vertex at a replay node");
}

void replay(const DeltaNode& node, SheddingReplay& out) {
    ++out.nodes;
    SimplicialComplex gamma = independence_complex(node_delta(node));
    if (gamma.is_simplex()) return;

    const int i = choose_shed_vertex(node, gamma);
    SORTIC_CHECK(is_shedding_vertex(gamma, i), "replay chose a non-shedding vertex");
    out.order.push_back(i);

    // Deletion constraints: the facets avoiding i, with i excluded.
    DeltaNode del{node.n, {}, face_with_vertex(node.forbidden, i)};
    for (FaceMask f : node.facets)
        if (!face_contains_vertex(f, i)) del.facets.push_back(f);
    normalize_node(del);

    // Link constraints: every facet with i stripped, reduced to the
    // inclusion-minimal ones, with i excluded.
    DeltaNode lk{node.n, {}, face_with_vertex(node.forbidden, i)};
    {
        std::vector<FaceMask> stripped;
        for (FaceMask f : node.facets) stripped.push_back(face_without_vertex(f, i));
        for (FaceMask f : stripped) {
            bool minimal = true;
            for (FaceMask g : stripped)
                if (g != f && face_subset(g, f)) minimal = false;
            if (minimal) lk.facets.push_back(f);
        }
        std::sort(lk.facets.begin(), lk.facets.end(), face_lex_less);
        lk.facets.erase(std::unique(lk.facets.begin(), lk.facets.end()),
                        lk.facets.end());
        normalize_node(lk);
    }

    SORTIC_CHECK(independence_complex(node_delta(del)) == deletion(gamma, i),
                 "deletion constraints drifted from the complex");
    SORTIC_CHECK(independence_complex(node_delta(lk)) == link(gamma, i),
                 "link constraints drifted from the complex");

    replay(del, out);
    replay(lk, out);
}

// A complex is a union of interval skeleta exactly when, for each facet, all
// same-size subsets of its spanned interval are faces (they may be absorbed
// by larger facets from other parts, so the test is at face level).
void require_interval_complex(const SimplicialComplex& delta) {
    if (delta.is_void()) return;
    for (FaceMask f : delta.facets()) {
        if (f == 0) continue;
        const int size = face_size(f);
        FaceMask span = interval_mask(face_min_vertex(f), face_max_vertex(f));
        for (FaceMask s : subsets_of_size(span, size)) {
            SORTIC_REQUIRE(delta.contains(s), "not an interval complex: facet " +
                                                  face_to_string(f) + " misses " +
                                                  face_to_string(s));
        }
    }
}

} // namespace

SheddingReplay interval_shedding_order(const IntervalComplexSpec& spec) {
    SimplicialComplex delta = build_interval_complex(spec);
    DeltaNode node{spec.n(), delta.facets(), 0};
    normalize_node(node);
    SheddingReplay out;
    replay(node, out);
    out.verified = true;
    return out;
}

CmStatus cm_status(const SimplicialComplex& delta) {
    require_interval_complex(delta);
    CmStatus st;
    SimplicialComplex ind = independence_complex(delta);
    st.pure_ind = ind.is_void() || ind.pure();
    std::vector<FaceMask> covers = minimal_covers(delta);
    st.unmixed = true;
    for (FaceMask c : covers)
        if (face_size(c) != face_size(covers.empty() ? 0 : covers.front()))
            st.unmixed = false;
    st.cm = st.unmixed;
    return st;
}

std::optional<std::vector<FaceMask>> dual_linear_quotients(
    const SimplicialComplex& delta) {
    SORTIC_REQUIRE(delta.n() <= 16, "cover enumeration capped at 16 vertices");
    std::vector<FaceMask> gens = minimal_covers(delta);
    std::sort(gens.begin(), gens.end(), face_lex_less);
    if (gens.size() <= 1) return gens;
    SORTIC_REQUIRE(gens.size() <= 64, "too many covers for the order search");

    // The colon condition depends only on the chosen set, so failed subsets
    // can be memoized.
    auto admits = [&](const std::vector<size_t>& chosen, size_t cand) {
        for (size_t wi : chosen) {
            FaceMask diff_w = gens[wi] & ~gens[cand];
            bool covered = false;
            for (size_t vi : chosen) {
                FaceMask diff_v = gens[vi] & ~gens[cand];
                if (face_size(diff_v) == 1 && face_subset(diff_v, diff_w)) {
                    covered = true;
                    break;
                }
            }
            if (!covered) return false;
        }
        return true;
    };

    std::set<std::uint64_t> dead;
    std::vector<size_t> chosen;
    std::uint64_t used = 0;
    auto dfs = [&](auto&& self) -> bool {
        if (chosen.size() == gens.size()) return true;
        if (dead.count(used)) return false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (used & (1ull << i)) continue;
            if (!admits(chosen, i)) continue;
            chosen.push_back(i);
            used |= (1ull << i);
            if (self(self)) return true;
            used &= ~(1ull << i);
            chosen.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (!dfs(dfs)) return std::nullopt;
    std::vector<FaceMask> order;
    for (size_t i : chosen) order.push_back(gens[i]);
    return order;
}

} // namespace sortic
