#include "sortic/corpus.hpp"

#include <algorithm>

#include "sortic/cone.hpp"
#include "sortic/divisor.hpp"

namespace sortic {

IntervalComplexSpec random_spec(Rng& rng, CorpusMode mode, int nmax, int d) {
    SORTIC_REQUIRE(nmax >= d, "ground set too small for the facet size");
    std::vector<IntervalPart> parts;
    if (mode == CorpusMode::partition) {
        const int max_parts = std::min(4, nmax / d);
        const int m = rng.range(1, max_parts);
        // Sizes ≥ d summing to at most nmax.
        std::vector<int> sizes(static_cast<size_t>(m), d);
        int budget = nmax - m * d;
        for (int i = 0; i < m && budget > 0; ++i) {
            int extra = rng.range(0, budget);
            sizes[static_cast<size_t>(i)] += extra;
            budget -= extra;
        }
        int lo = 1;
        for (int i = 0; i < m; ++i) {
            parts.push_back({lo, lo + sizes[static_cast<size_t>(i)] - 1, d - 1});
            lo += sizes[static_cast<size_t>(i)];
        }
        return IntervalComplexSpec(lo - 1, parts);
    }
    // Overlap mode: strictly increasing lo and hi, each length ≥ d, gaps
    // avoided so every vertex lies in some interval.
    int lo = 1;
    int hi = lo + d - 1 + rng.range(0, std::min(2, nmax - d));
    parts.push_back({lo, hi, d - 1});
    while (hi < nmax) {
        int next_lo = rng.range(lo + 1, hi + 1);
        int min_hi = std::max(hi + 1, next_lo + d - 1);
        if (min_hi > nmax) break;
        int next_hi = rng.range(min_hi, std::min(nmax, min_hi + 2));
        parts.push_back({next_lo, next_hi, d - 1});
        lo = next_lo;
        hi = next_hi;
        if (static_cast<int>(parts.size()) >= 4) break;
    }
    return IntervalComplexSpec(hi, parts);
}

IntervalComplexSpec random_mixed_spec(Rng& rng, int nmax) {
    std::vector<IntervalPart> parts;
    int lo = 1;
    int hi = 0;
    while (true) {
        int len = rng.range(1, 4);
        if (lo + len - 1 > nmax) break;
        int rank = rng.range(1, 3);
        int next_hi = lo + len - 1;
        if (next_hi <= hi) {  // keep hi strictly increasing
            lo = hi + 1;
            continue;
        }
        parts.push_back({lo, next_hi, rank});
        hi = next_hi;
        if (hi >= nmax || static_cast<int>(parts.size()) >= 4) break;
        lo = rng.range(lo + 1, hi + 1);
    }
    if (parts.empty()) parts.push_back({1, 1, 1});
    return IntervalComplexSpec(std::max(hi, 1), parts);
}

CorpusOutcome corpus_run(const CorpusParams& params) {
    SORTIC_REQUIRE(params.nmax <= 9, "corpus ground sets are capped at 9");
    SORTIC_REQUIRE(params.dmin >= 3 && params.dmax >= params.dmin,
                   "corpus facet sizes start at 3");
    CorpusOutcome out;
    Report& r = out.report;
    r.add("corpus.seed", static_cast<long long>(params.seed));
    r.add("corpus.mode", std::string(params.mode == CorpusMode::partition
                                         ? "partition"
                                         : "overlap"));
    r.add("corpus.count", params.count);
    r.add("corpus.nmax", params.nmax);

    Rng rng(params.seed);
    long long confirmed = 0, counterexamples = 0, gorenstein = 0;
    long long floor_attained = 0, floor_violations = 0;

    for (int idx = 1; idx <= params.count; ++idx) {
        const int d = rng.range(params.dmin, params.dmax);
        IntervalComplexSpec spec = random_spec(rng, params.mode, params.nmax, d);
        SimplicialComplex delta = build_interval_complex(spec);
        ParsedInstance inst{"corpus-" + std::to_string(params.seed) + "-" +
                                std::to_string(idx),
                            delta, spec};

        ConeDescription cone = cone_of(independence_complex(delta));
        FacetClassification cls = classify_facets(delta, cone.facet_forms);
        ConjectureVerdict cv = conjecture_check(cls);
        GorensteinResult go = gorenstein_test(cls);
        AInvariant ai = a_invariant(cone);

        int omega = 0;
        for (const IntervalPart& p : spec.parts())
            omega = std::max(omega, p.hi - p.lo + 1);
        const long long floor_level = interior_degree_floor(omega, d);

        std::string summary = "n=" + std::to_string(spec.n()) + " d=" +
                              std::to_string(d) + " parts=";
        for (size_t j = 0; j < spec.parts().size(); ++j) {
            if (j) summary += ";";
            summary += interval_to_string(spec.parts()[j]) + "r" +
                       std::to_string(spec.parts()[j].rank);
        }
        summary += cv.status == ConjectureStatus::confirmed ? " conjecture=confirmed"
                                                            : " conjecture=COUNTEREXAMPLE";
        summary += " gorenstein=" + (go.a ? go.a->str() : std::string("none"));
        summary += " a=" + std::to_string(ai.a);
        r.add("corpus.instance." + std::to_string(idx), summary);

        if (cv.status == ConjectureStatus::confirmed) {
            ++confirmed;
        } else {
            ++counterexamples;
            std::string name = inst.id + ".txt";
            std::string body = instance_to_text(inst);
            body += "# unexpected form " +
                    ivec_to_string(cv.unexpected_form->coeffs) + "\n";
            for (size_t i = 0; i < cone.facet_forms.size(); ++i)
                body += "# form " + std::to_string(i + 1) + " " +
                        ivec_to_string(cone.facet_forms[i].coeffs) + "\n";
            out.counterexamples.push_back({name, body});
        }
        if (go.a) ++gorenstein;
        if (-ai.a == floor_level) ++floor_attained;
        SORTIC_CHECK(-ai.a >= floor_level,
                     "interior degree below the proven floor");
        if (cv.status == ConjectureStatus::confirmed && -ai.a != floor_level)
            ++floor_violations;
    }

    r.add("corpus.confirmed", confirmed);
    r.add("corpus.counterexamples", counterexamples);
    r.add("corpus.gorenstein", gorenstein);
    r.add("corpus.degree_floor_attained", floor_attained);
    r.add("corpus.degree_floor_violations", floor_violations);
    return out;
}

const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> fx = {
        {"k3",
         "# complete graph on three vertices\n"
         "n 3\n"
         "facet 1 2\n"
         "facet 1 3\n"
         "facet 2 3\n"},
        {"path",
         "# path graph 1-2-3\n"
         "n 3\n"
         "facet 1 2\n"
         "facet 2 3\n"},
        {"tet4",
         "# all triples on four vertices\n"
         "n 4\n"
         "facet 1 2 3\n"
         "facet 1 2 4\n"
         "facet 1 3 4\n"
         "facet 2 3 4\n"},
        {"twin3",
         "# two disjoint triple blocks\n"
         "n 6\n"
         "interval 1 3 2\n"
         "interval 4 6 2\n"},
    };
    return fx;
}

ParsedInstance fixture_instance(const std::string& name) {
    for (const Fixture& f : fixtures())
        if (f.name == name) return parse_instance(f.text, f.name);
    throw PreconditionError("unknown fixture '" + name + "'");
}

} // namespace sortic
