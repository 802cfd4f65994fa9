#include "sortic/report.hpp"

#include <algorithm>
#include <sstream>

#include "sortic/cone.hpp"
#include "sortic/divisor.hpp"
#include "sortic/groebner.hpp"
#include "sortic/sorting.hpp"
#include "sortic/vertex_decomposition.hpp"

namespace sortic {

std::string Report::str() const {
    std::string out;
    for (const auto& [k, v] : lines_) {
        out += k;
        out += " = ";
        out += v;
        out += "\n";
    }
    return out;
}

std::string Report::value(const std::string& key) const {
    for (const auto& [k, v] : lines_)
        if (k == key) return v;
    return {};
}

SelectorSet all_selectors() {
    return {Selector::recognize, Selector::sortable, Selector::cone,
            Selector::divisor,   Selector::conjecture, Selector::groebner,
            Selector::vd,        Selector::cm};
}

SelectorSet parse_selectors(const std::string& text) {
    SelectorSet out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item == "all") {
            return all_selectors();
        } else if (item == "recognize") {
            out.insert(Selector::recognize);
        } else if (item == "sortable") {
            out.insert(Selector::sortable);
        } else if (item == "cone") {
            out.insert(Selector::cone);
        } else if (item == "divisor") {
            out.insert(Selector::divisor);
        } else if (item == "conjecture") {
            out.insert(Selector::conjecture);
        } else if (item == "groebner") {
            out.insert(Selector::groebner);
        } else if (item == "vd") {
            out.insert(Selector::vd);
        } else if (item == "cm") {
            out.insert(Selector::cm);
        } else {
            throw PreconditionError("unknown selector '" + item + "'");
        }
    }
    SORTIC_REQUIRE(!out.empty(), "no selectors given");
    return out;
}

namespace {

std::string pair_to_string(FaceMask a, FaceMask b) {
    return "(" + face_to_string(a) + "," + face_to_string(b) + ")";
}

std::string point_to_string(const LatticePoint& p) { return ivec_to_string(p.coords); }

bool wants(const SelectorSet& sel, Selector s) { return sel.count(s) > 0; }

} // namespace

Report run_analysis(const ParsedInstance& inst, const SelectorSet& selectors) {
    Report r;
    const SimplicialComplex& delta = inst.delta;
    r.add("instance.id", inst.id);
    r.add("instance.format", std::string(inst.spec ? "intervals" : "facets"));
    r.add("delta.n", delta.n());
    r.add("delta.facet_count", static_cast<long long>(delta.facets().size()));
    if (delta.is_void()) {
        r.add("delta.void", true);
    } else {
        r.add("delta.dim", delta.dim());
        r.add("delta.pure", delta.pure());
    }

    const RecognitionVerdict rec = is_unit_interval(delta);
    const bool analyzable =
        rec.is_unit_interval && !delta.is_void() && delta.dim() >= 1;

    if (wants(selectors, Selector::recognize)) {
        r.add("recognition.unit_interval", rec.is_unit_interval);
        if (rec.failure == RecognitionFailure::not_pure) {
            r.add("recognition.failure", std::string("not_pure"));
            r.add("recognition.witness_facet", face_to_string(rec.witness_facet));
        } else if (rec.failure == RecognitionFailure::missing_subset) {
            r.add("recognition.failure", std::string("missing_subset"));
            r.add("recognition.witness_facet", face_to_string(rec.witness_facet));
            r.add("recognition.missing_subset", face_to_string(rec.missing_subset));
        }
        for (size_t j = 0; j < rec.clique_intervals.size(); ++j) {
            const IntervalPart& b = rec.clique_intervals[j];
            r.add("recognition.clique_interval." + std::to_string(j + 1),
                  std::to_string(b.lo) + " " + std::to_string(b.hi));
        }
        if (analyzable) r.add("recognition.d", delta.dim() + 1);
    }

    SimplicialComplex gamma = independence_complex(delta);
    r.add("ind.facet_count", static_cast<long long>(gamma.facets().size()));
    if (!gamma.is_void()) {
        r.add("ind.dim", gamma.dim());
        r.add("ind.pure", gamma.pure());
    }
    if (delta.n() <= 12) {
        // The minimal non-faces of the independence complex are exactly the
        // facets we started from.
        SORTIC_CHECK(minimal_nonfaces(gamma) == delta.facets(),
                     "independence complex inconsistency");
        if (auto d = flag_degree(gamma)) r.add("ind.flag_degree", *d);
    }

    if (wants(selectors, Selector::sortable)) {
        SortabilityVerdict v = is_sortable(gamma);
        r.add("sortable.verdict", v.sortable);
        if (v.witness)
            r.add("sortable.witness", pair_to_string(v.witness->first, v.witness->second));
    }

    std::optional<ConeDescription> cone;
    const bool cone_needed = wants(selectors, Selector::cone) ||
                             wants(selectors, Selector::divisor) ||
                             wants(selectors, Selector::conjecture);
    if (cone_needed) {
        if (analyzable) {
            cone = cone_of(gamma);
        } else {
            r.add("cone.skipped", std::string("requires_unit_interval_dim_ge_1"));
        }
    }
    if (wants(selectors, Selector::cone) && cone) {
        r.add("cone.generators", static_cast<long long>(cone->generators.size()));
        r.add("cone.facet_count", static_cast<long long>(cone->facet_forms.size()));
        for (size_t i = 0; i < cone->facet_forms.size(); ++i)
            r.add("cone.form." + std::to_string(i + 1),
                  ivec_to_string(cone->facet_forms[i].coeffs));
    }

    std::optional<FacetClassification> cls;
    if (cone && (wants(selectors, Selector::divisor) ||
                 wants(selectors, Selector::conjecture)))
        cls = classify_facets(delta, cone->facet_forms);

    if (wants(selectors, Selector::divisor)) {
        if (!cls) {
            r.add("divisor.skipped", std::string("requires_unit_interval_dim_ge_1"));
        } else {
            r.add("divisor.q_forms", static_cast<long long>(cls->q_forms.size()));
            r.add("divisor.p_forms", static_cast<long long>(cls->p_forms.size()));
            r.add("divisor.l_forms", static_cast<long long>(cls->l_forms.size()));
            r.add("divisor.unexpected_forms",
                  static_cast<long long>(cls->unexpected.size()));
            ClassGroup cg = class_group(*cls);
            r.add("divisor.class_rank", cg.free_rank);
            r.add("divisor.class_torsion", cg.torsion);
            GorensteinResult go = gorenstein_test(*cls);
            r.add("divisor.gorenstein", go.a ? go.a->str() : std::string("none"));
            if (go.conditional) r.add("divisor.gorenstein_conditional", true);
            AInvariant ai = a_invariant(*cone);
            r.add("divisor.a_invariant", ai.a);
            r.add("divisor.canonical_witness", point_to_string(ai.witness));
            TRadicalResult tr = t_radical_test(delta, *cls, *cone);
            r.add("divisor.t_radical", tr.radical);
            if (tr.certified_monomials)
                r.add("divisor.t_radical_certified", *tr.certified_monomials);
            if (delta.dim() >= 2) {
                int omega = 0;
                for (const IntervalPart& b : rec.clique_intervals)
                    omega = std::max(omega, b.hi - b.lo + 1);
                long long f = interior_degree_floor(omega, delta.dim() + 1);
                r.add("divisor.degree_floor", f);
                r.add("divisor.degree_floor_attained", -ai.a == f);
            }
        }
    }

    if (wants(selectors, Selector::conjecture)) {
        if (!cls || delta.dim() < 2) {
            r.add("conjecture.verdict", std::string("not_applicable"));
        } else {
            ConjectureVerdict cv = conjecture_check(*cls);
            r.add("conjecture.verdict",
                  std::string(cv.status == ConjectureStatus::confirmed
                                  ? "confirmed"
                                  : "counterexample"));
            if (cv.unexpected_form)
                r.add("conjecture.unexpected_form",
                      ivec_to_string(cv.unexpected_form->coeffs));
        }
    }

    if (wants(selectors, Selector::groebner)) {
        if (!analyzable || gamma.is_void()) {
            r.add("groebner.skipped", std::string("requires_unit_interval_dim_ge_1"));
        } else if (delta.n() > 7) {
            r.add("groebner.skipped", std::string("ground_set_beyond_7"));
        } else {
            std::vector<FaceMask> faces = gamma.all_faces();
            r.add("groebner.binomials",
                  static_cast<long long>(sorting_binomials(faces).size()));
            for (int rdeg = 2; rdeg <= 3; ++rdeg) {
                StandardCountResult sc = standard_count_check(faces, delta.n(), rdeg);
                r.add("groebner.standard_r" + std::to_string(rdeg),
                      std::string(sc.pass ? "pass " : "FAIL ") +
                          std::to_string(sc.sorted_count) + " " +
                          std::to_string(sc.semigroup_count));
            }
            for (int t = 0; t <= gamma.dim(); ++t) {
                const std::string prefix = "groebner.skel" + std::to_string(t);
                ExchangeResult ex = l_exchange_check(delta, t, 2);
                r.add(prefix + ".exchange", ex.holds);
                ReesFiberReport rf = rees_fiber_connectivity(delta, t, 3);
                r.add(prefix + ".rees_connected", rf.all_connected);
                r.add(prefix + ".rees_fibers",
                      static_cast<long long>(rf.fibers.size()));
            }
        }
    }

    std::optional<IntervalComplexSpec> spec = inst.spec;
    if (!spec && !delta.is_void()) {
        try {
            spec = spec_from_complex(delta);
        } catch (const PreconditionError&) {
            // not an interval complex; replay and cm sections will skip
        }
    }

    if (wants(selectors, Selector::vd)) {
        if (delta.n() > 10) {
            r.add("vd.skipped", std::string("ground_set_beyond_10"));
        } else {
            std::optional<SheddingTree> tree = is_vertex_decomposable(gamma);
            r.add("vd.decomposable", tree.has_value());
            if (tree) r.add("vd.tree_nodes", tree->node_count());
        }
        if (spec) {
            SheddingReplay replay = interval_shedding_order(*spec);
            r.add("vd.replay_verified", replay.verified);
            std::string order;
            for (size_t i = 0; i < replay.order.size(); ++i) {
                if (i) order += " ";
                order += std::to_string(replay.order[i]);
            }
            r.add("vd.replay_order", order.empty() ? std::string("(empty)") : order);
        } else {
            r.add("vd.replay_skipped", std::string("no_interval_presentation"));
        }
    }

    if (wants(selectors, Selector::cm)) {
        try {
            CmStatus st = cm_status(delta);
            r.add("cm.pure_ind", st.pure_ind);
            r.add("cm.unmixed", st.unmixed);
            r.add("cm.cm", st.cm);
        } catch (const PreconditionError&) {
            r.add("cm.skipped", std::string("requires_interval_complex"));
        }
        if (delta.n() <= 10) {
            std::vector<FaceMask> covers = minimal_covers(delta);
            r.add("dual.cover_count", static_cast<long long>(covers.size()));
            std::optional<std::vector<FaceMask>> order = dual_linear_quotients(delta);
            r.add("dual.linear_quotients", order.has_value());
        }
    }

    return r;
}

} // namespace sortic
