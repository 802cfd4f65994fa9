#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sortic/corpus.hpp"
#include "sortic/report.hpp"

using namespace sortic;

TEST_CASE("parsing instance files") {
    ParsedInstance path = parse_instance("n 3\nfacet 1 2\nfacet 2 3\n", "path");
    CHECK(path.delta.n() == 3);
    CHECK(path.delta.facets().size() == 2);
    CHECK(!path.spec.has_value());

    ParsedInstance tet = parse_instance("n 4\ninterval 1 4 2\n", "tet");
    REQUIRE(tet.spec.has_value());
    CHECK(tet.spec->parts().size() == 1);
    CHECK(tet.delta.facets().size() == 4);

    // Comments, blank lines, CRLF.
    ParsedInstance c = parse_instance("# hello\n\nn 2\r\nfacet 1 2\n");
    CHECK(c.delta.facets().size() == 1);
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_instance("n 3\nfacet 1 5\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 9);
    }

    CHECK_THROWS_AS(parse_instance(""), ParseError);
    CHECK_THROWS_AS(parse_instance("facet 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 3\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 3\nfacet 1 2\ninterval 1 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 3\nfacet 1 2\nfacet 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 3\nfacet 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 0\nfacet 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n 3\nwibble 1\n"), ParseError);
    // Interval invariants are parse-level failures.
    CHECK_THROWS_AS(parse_instance("n 5\ninterval 2 4 1\ninterval 1 5 1\n"), ParseError);
}

TEST_CASE("instance round trip") {
    for (const Fixture& f : fixtures()) {
        ParsedInstance inst = parse_instance(f.text, f.name);
        ParsedInstance again = parse_instance(instance_to_text(inst), f.name);
        CHECK(inst.delta == again.delta);
        CHECK(inst.spec == again.spec);
    }
}

TEST_CASE("selector parsing") {
    CHECK(parse_selectors("all") == all_selectors());
    CHECK(parse_selectors("recognize,divisor").size() == 2);
    CHECK_THROWS_AS(parse_selectors("bogus"), PreconditionError);
    CHECK_THROWS_AS(parse_selectors(""), PreconditionError);
}

TEST_CASE("analysis report on the fixtures") {
    Report tet = run_analysis(fixture_instance("tet4"), all_selectors());
    CHECK(tet.value("recognition.unit_interval") == "true");
    CHECK(tet.value("recognition.d") == "3");
    CHECK(tet.value("sortable.verdict") == "true");
    CHECK(tet.value("cone.facet_count") == "9");
    CHECK(tet.value("divisor.gorenstein") == "none");
    CHECK(tet.value("divisor.a_invariant") == "-3");
    CHECK(tet.value("divisor.class_rank") == "4");
    CHECK(tet.value("divisor.t_radical") == "false");
    CHECK(tet.value("conjecture.verdict") == "confirmed");
    CHECK(tet.value("vd.decomposable") == "true");
    CHECK(tet.value("vd.replay_order").substr(0, 1) == "4");
    CHECK(tet.value("cm.cm") == "true");
    CHECK(tet.value("ind.flag_degree") == "3");

    Report k3 = run_analysis(fixture_instance("k3"), parse_selectors("divisor"));
    CHECK(k3.value("divisor.gorenstein") == "4");
    CHECK(k3.value("divisor.a_invariant") == "-4");
    CHECK(k3.value("divisor.canonical_witness") == "(1,1,1,4)");
    CHECK(k3.value("divisor.t_radical") == "true");

    Report path = run_analysis(fixture_instance("path"), parse_selectors("divisor"));
    CHECK(path.value("divisor.gorenstein") == "3");
    CHECK(path.value("divisor.a_invariant") == "-3");

    Report twin = run_analysis(fixture_instance("twin3"), all_selectors());
    CHECK(twin.value("divisor.gorenstein") == "2");
    CHECK(twin.value("divisor.a_invariant") == "-2");
    CHECK(twin.value("divisor.class_rank") == "7");
    CHECK(twin.value("divisor.class_torsion") == "1");
    CHECK(twin.value("conjecture.verdict") == "confirmed");
}

TEST_CASE("sections requiring unit-interval inputs are skipped gracefully") {
    ParsedInstance bad = parse_instance("n 3\nfacet 1 3\n", "bad");
    Report r = run_analysis(bad, all_selectors());
    CHECK(r.value("recognition.unit_interval") == "false");
    CHECK(r.value("recognition.failure") == "missing_subset");
    CHECK(r.value("sortable.verdict") == "false");
    CHECK(r.value("divisor.skipped") == "requires_unit_interval_dim_ge_1");
    CHECK(r.value("conjecture.verdict") == "not_applicable");
    CHECK(r.value("cm.skipped") == "requires_interval_complex");
}

TEST_CASE("reports are deterministic") {
    for (const Fixture& f : fixtures()) {
        ParsedInstance inst = parse_instance(f.text, f.name);
        Report a = run_analysis(inst, all_selectors());
        Report b = run_analysis(inst, all_selectors());
        CHECK(a.str() == b.str());
        CHECK(!a.str().empty());
    }
}

TEST_CASE("corpus runs are deterministic and clean at small scale") {
    CorpusParams params;
    params.seed = 7;
    params.count = 10;
    params.mode = CorpusMode::partition;
    params.nmax = 8;
    CorpusOutcome first = corpus_run(params);
    CorpusOutcome second = corpus_run(params);
    CHECK(first.report.str() == second.report.str());
    CHECK(first.report.value("corpus.confirmed") == "10");
    CHECK(first.report.value("corpus.counterexamples") == "0");
    CHECK(first.counterexamples.empty());
    // Equality of the interior-degree floor on partition instances.
    CHECK(first.report.value("corpus.degree_floor_attained") == "10");
    CHECK(first.report.value("corpus.degree_floor_violations") == "0");

    params.mode = CorpusMode::overlap;
    CorpusOutcome overlap = corpus_run(params);
    CHECK(overlap.report.value("corpus.counterexamples") == "0");

    // An empty range aggregates to zeros.
    params.count = 0;
    CorpusOutcome empty = corpus_run(params);
    CHECK(empty.report.value("corpus.confirmed") == "0");
    CHECK(empty.report.value("corpus.gorenstein") == "0");
}

TEST_CASE("fixtures are available by name") {
    CHECK(fixtures().size() == 4);
    CHECK_THROWS_AS(fixture_instance("nope"), PreconditionError);
    ParsedInstance twin = fixture_instance("twin3");
    CHECK(twin.spec.has_value());
}
