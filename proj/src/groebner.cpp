#include "sortic/groebner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

namespace sortic {

namespace {

std::vector<FaceMask> canonical_faces(std::vector<FaceMask> m) {
    std::sort(m.begin(), m.end(), face_lex_less);
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

void require_sorting_closed(const std::vector<FaceMask>& m) {
    std::set<FaceMask> members(m.begin(), m.end());
    for (FaceMask f : m) {
        for (FaceMask g : m) {
            auto [a, b] = sort_faces(f, g);
            SORTIC_REQUIRE(members.count(a) && members.count(b),
                           "set not closed under sorting: pair " +
                               face_to_string(f) + ", " + face_to_string(g));
        }
    }
}

// Generators of the facet ideal of Ind(Δ)^[t]: the size-(t+1) faces.
std::vector<FaceMask> skeleton_generators(const SimplicialComplex& delta, int t) {
    SimplicialComplex gamma = independence_complex(delta);
    std::vector<FaceMask> gens;
    for (FaceMask f : gamma.all_faces())
        if (face_size(f) == t + 1) gens.push_back(f);
    SORTIC_REQUIRE(!gens.empty(), "pure skeleton at dimension " + std::to_string(t) +
                                      " is void");
    return canonical_faces(std::move(gens));
}

} // namespace

std::vector<SortingBinomial> sorting_binomials(const std::vector<FaceMask>& m) {
    std::vector<FaceMask> faces = canonical_faces(m);
    require_sorting_closed(faces);
    std::vector<SortingBinomial> out;
    for (size_t i = 0; i < faces.size(); ++i) {
        for (size_t j = i; j < faces.size(); ++j) {
            FaceMask f = faces[i], g = faces[j];
            auto [a, b] = sort_faces(f, g);
            bool same = (a == f && b == g) || (a == g && b == f);
            if (!same) out.push_back({f, g, a, b});
        }
    }
    return out;
}

StandardCountResult standard_count_check(const std::vector<FaceMask>& m, int n,
                                         int r) {
    SORTIC_REQUIRE(r >= 1 && r <= 4, "degree out of the exhaustive range");
    std::vector<FaceMask> faces = canonical_faces(m);
    require_sorting_closed(faces);

    StandardCountResult res;
    std::set<std::vector<int>> products;
    std::vector<size_t> pick(static_cast<size_t>(r), 0);

    auto emit = [&]() {
        bool sorted = true;
        for (size_t i = 0; i < pick.size() && sorted; ++i)
            for (size_t j = i + 1; j < pick.size() && sorted; ++j)
                sorted = faces_sorted_unordered(faces[pick[i]], faces[pick[j]]);
        if (sorted) ++res.sorted_count;
        std::vector<int> prod(static_cast<size_t>(n), 0);
        for (size_t idx : pick)
            for (int v : face_vertices(faces[idx])) ++prod[static_cast<size_t>(v - 1)];
        products.insert(std::move(prod));
    };

    auto rec = [&](auto&& self, size_t pos, size_t from) -> void {
        if (pos == pick.size()) {
            emit();
            return;
        }
        for (size_t i = from; i < faces.size(); ++i) {
            pick[pos] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);

    res.semigroup_count = static_cast<long long>(products.size());
    res.pass = (res.sorted_count == res.semigroup_count);
    return res;
}

ExchangeResult l_exchange_check_generators(const std::vector<FaceMask>& gens,
                                           int n, int cap_n) {
    SORTIC_REQUIRE(cap_n >= 1 && cap_n <= 3, "tuple length out of range");
    std::vector<FaceMask> faces = canonical_faces(gens);
    std::set<FaceMask> genset(faces.begin(), faces.end());

    // All pairwise-sorted multisets of size cap_n, as index tuples.
    std::vector<std::vector<size_t>> tuples;
    std::vector<size_t> pick(static_cast<size_t>(cap_n));
    auto rec = [&](auto&& self, size_t pos, size_t from) -> void {
        if (pos == pick.size()) {
            for (size_t i = 0; i < pick.size(); ++i)
                for (size_t j = i + 1; j < pick.size(); ++j)
                    if (!faces_sorted_unordered(faces[pick[i]], faces[pick[j]]))
                        return;
            tuples.push_back(pick);
            return;
        }
        for (size_t i = from; i < faces.size(); ++i) {
            pick[pos] = i;
            self(self, pos + 1, i);
        }
    };
    rec(rec, 0, 0);

    std::vector<std::vector<int>> degree(tuples.size());
    for (size_t t = 0; t < tuples.size(); ++t) {
        degree[t].assign(static_cast<size_t>(n), 0);
        for (size_t idx : tuples[t])
            for (int v : face_vertices(faces[idx])) ++degree[t][static_cast<size_t>(v - 1)];
    }

    ExchangeResult res;
    res.holds = true;
    for (size_t tu = 0; tu < tuples.size(); ++tu) {
        for (size_t tv = 0; tv < tuples.size(); ++tv) {
            if (tu == tv) continue;
            int q = 0;  // 1-based first difference
            for (int i = 1; i <= n; ++i) {
                if (degree[tu][static_cast<size_t>(i - 1)] !=
                    degree[tv][static_cast<size_t>(i - 1)]) {
                    q = i;
                    break;
                }
            }
            if (q == 0 || q > n - 1) continue;
            if (degree[tu][static_cast<size_t>(q - 1)] >=
                degree[tv][static_cast<size_t>(q - 1)])
                continue;
            ++res.pairs_examined;

            bool witness = false;
            for (size_t idx : tuples[tu]) {
                FaceMask u = faces[idx];
                if (face_contains_vertex(u, q)) continue;  // swap would square x_q
                for (int j : face_vertices(u)) {
                    if (j <= q) continue;
                    FaceMask swapped = face_with_vertex(face_without_vertex(u, j), q);
                    if (genset.count(swapped)) {
                        witness = true;
                        break;
                    }
                }
                if (witness) break;
            }
            if (!witness) {
                res.holds = false;
                ExchangeWitness w;
                for (size_t idx : tuples[tu]) w.u_tuple.push_back(faces[idx]);
                for (size_t idx : tuples[tv]) w.v_tuple.push_back(faces[idx]);
                w.q = q;
                res.violation = std::move(w);
                return res;
            }
        }
    }
    return res;
}

ExchangeResult l_exchange_check(const SimplicialComplex& delta, int t, int cap_n) {
    return l_exchange_check_generators(skeleton_generators(delta, t), delta.n(),
                                       cap_n);
}

ReesFiberReport rees_fiber_connectivity(const SimplicialComplex& delta, int t,
                                        int degree_bound) {
    SORTIC_REQUIRE(degree_bound >= 1 && degree_bound <= 5,
                   "degree bound out of the exhaustive range");
    const int n = delta.n();
    std::vector<FaceMask> gens = skeleton_generators(delta, t);
    std::map<FaceMask, size_t> gen_index;
    for (size_t i = 0; i < gens.size(); ++i) gen_index[gens[i]] = i;

    // A presentation monomial is x^a * y_{U}; key both parts canonically.
    using Monom = std::pair<std::vector<int>, std::vector<size_t>>;
    std::map<IntVec, std::vector<Monom>> fibers;

    std::vector<int> a(static_cast<size_t>(n), 0);
    std::vector<size_t> u;
    auto image = [&]() {
        IntVec img(static_cast<size_t>(n + 1), 0);
        for (int i = 0; i < n; ++i) img[static_cast<size_t>(i)] = a[static_cast<size_t>(i)];
        for (size_t idx : u)
            for (int v : face_vertices(gens[idx])) img[static_cast<size_t>(v - 1)] += 1;
        img.back() = static_cast<long long>(u.size());
        return img;
    };

    auto enum_y = [&](auto&& self, size_t pos, size_t from, int r) -> void {
        if (static_cast<int>(u.size()) == r) {
            fibers[image()].push_back({a, u});
            return;
        }
        for (size_t i = from; i < gens.size(); ++i) {
            u.push_back(i);
            self(self, pos + 1, i, r);
            u.pop_back();
        }
    };
    auto enum_x = [&](auto&& self, int pos, int left, int r) -> void {
        if (pos == n) {
            if (left == 0) enum_y(enum_y, 0, 0, r);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            a[static_cast<size_t>(pos)] = x;
            self(self, pos + 1, left - x, r);
        }
        a[static_cast<size_t>(pos)] = 0;
    };
    for (int s = 0; s <= degree_bound; ++s)
        for (int r = 0; s + r <= degree_bound; ++r)
            if (r >= 1 || s >= 1) enum_x(enum_x, 0, s, r);

    ReesFiberReport report;
    report.all_connected = true;
    for (auto& [img, elements] : fibers) {
        report.total_monomials += static_cast<long long>(elements.size());
        if (elements.size() < 2) continue;

        std::map<Monom, size_t> index;
        for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;

        // Collect the quadratic moves as undirected edges: a relation links
        // both of its sides.
        std::vector<std::vector<size_t>> adjacency(elements.size());
        for (size_t cur_idx = 0; cur_idx < elements.size(); ++cur_idx) {
            const Monom& cur = elements[cur_idx];
            auto visit = [&](Monom next) {
                std::sort(next.second.begin(), next.second.end());
                auto it = index.find(next);
                SORTIC_CHECK(it != index.end(), "move left the fiber");
                adjacency[cur_idx].push_back(it->second);
                adjacency[it->second].push_back(cur_idx);
            };
            const auto& [ax, uy] = cur;
            // Sorting moves on y-pairs.
            for (size_t i = 0; i < uy.size(); ++i) {
                for (size_t j = i + 1; j < uy.size(); ++j) {
                    FaceMask f = gens[uy[i]], g = gens[uy[j]];
                    auto [fs, gs] = sort_faces(f, g);
                    bool same = (fs == f && gs == g) || (fs == g && gs == f);
                    if (same) continue;
                    auto itf = gen_index.find(fs);
                    auto itg = gen_index.find(gs);
                    SORTIC_CHECK(itf != gen_index.end() && itg != gen_index.end(),
                                 "sort left the generator set");
                    Monom next = cur;
                    next.second[i] = itf->second;
                    next.second[j] = itg->second;
                    visit(std::move(next));
                }
            }
            // Exchange moves x_i * y_u -> x_j * y_{(u - j) + i}.
            for (size_t ui = 0; ui < uy.size(); ++ui) {
                FaceMask f = gens[uy[ui]];
                for (int i = 1; i <= n; ++i) {
                    if (ax[static_cast<size_t>(i - 1)] == 0) continue;
                    if (face_contains_vertex(f, i)) continue;
                    for (int j : face_vertices(f)) {
                        FaceMask swapped = face_with_vertex(face_without_vertex(f, j), i);
                        auto it = gen_index.find(swapped);
                        if (it == gen_index.end()) continue;
                        Monom next = cur;
                        next.first[static_cast<size_t>(i - 1)] -= 1;
                        next.first[static_cast<size_t>(j - 1)] += 1;
                        next.second[ui] = it->second;
                        visit(std::move(next));
                    }
                }
            }
        }

        std::vector<bool> seen(elements.size(), false);
        std::queue<size_t> bfs;
        bfs.push(0);
        seen[0] = true;
        size_t reached = 1;
        while (!bfs.empty()) {
            size_t cur = bfs.front();
            bfs.pop();
            for (size_t nxt : adjacency[cur]) {
                if (!seen[nxt]) {
                    seen[nxt] = true;
                    ++reached;
                    bfs.push(nxt);
                }
            }
        }

        FiberVerdict verdict;
        verdict.multidegree = img;
        verdict.fiber_size = static_cast<long long>(elements.size());
        verdict.connected = (reached == elements.size());
        if (!verdict.connected) report.all_connected = false;
        report.fibers.push_back(std::move(verdict));
    }
    return report;
}

} // namespace sortic
