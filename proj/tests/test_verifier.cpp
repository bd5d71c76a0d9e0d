#include <gtest/gtest.h>

#include "fibharm/errors.hpp"
#include "fibharm/registry.hpp"
#include "fibharm/report.hpp"
#include "fibharm/verifier.hpp"
#include "json.hpp"

using namespace fibharm;

namespace {

GridSpec with(std::string overrides, std::int64_t n_max = 24) {
    GridSpec g;
    g.context.n_max = n_max;
    parse_overrides(overrides, g);
    return g;
}

}  // namespace

TEST(Grid, OverridesByKind) {
    const auto& e = lookup("gq-thm");
    const auto pts = enumerate_grid(e, with("n=0..1,m=-3/2..1/2,r=0,s=1,t=2,seed=0:1|2:1"));
    // n: 2, m: -3/2 -1/2 1/2, seeds: 2
    ASSERT_EQ(pts.size(), 12u);
    EXPECT_EQ(pts.front().to_string(), "n=0,m=-3/2,r=0,s=1,t=2,seed=0:1");
    EXPECT_EQ(pts.back().to_string(), "n=1,m=1/2,r=0,s=1,t=2,seed=2:1");
}

TEST(Grid, SortedNumericallyAndDeduplicated) {
    const auto& e = lookup("rec-FF-part");
    const auto pts = enumerate_grid(e, with("n=10|2|2|1..3"));
    std::vector<std::string> got;
    for (const auto& p : pts) got.push_back(p.to_string());
    EXPECT_EQ(got, (std::vector<std::string>{"n=1", "n=2", "n=3", "n=10"}));
}

TEST(Grid, ConstraintsFilterPoints) {
    const auto& e = lookup("rec-odd");  // r odd >= 1
    for (const auto& p : enumerate_grid(e, with("", 3))) {
        const auto r = p.i("r");
        EXPECT_TRUE(r >= 1 && r % 2 == 1) << p.to_string();
    }
    EXPECT_TRUE(enumerate_grid(e, with("r=2")).empty());
}

TEST(Grid, BadOverrides) {
    GridSpec g;
    EXPECT_THROW(parse_overrides("n", g), ParseError);
    EXPECT_THROW(enumerate_grid(lookup("rec-FF-part"), with("n=5..1")), ParseError);
    EXPECT_THROW(enumerate_grid(lookup("gib-sq"), with("seed=0:1..2:1")), ParseError);
    EXPECT_THROW(sweep({"rec-FF-part"}, with("zz=1")), ParseError);
    EXPECT_THROW(sweep({"nope"}, GridSpec{}), NotFound);
}

TEST(Sweep, CountsAndCompleteness) {
    const auto s = sweep({"rec-FF-part"}, with("n=1..60"));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].checked, 60);
    EXPECT_EQ(s[0].equal, 60);
    EXPECT_EQ(s[0].unequal, 0);
    EXPECT_FALSE(s[0].first_counterexample);

    GridSpec g = with("", 8);
    for (const auto& sum : sweep({"fib4-sq", "gould2-G", "shift-simple"}, g)) {
        EXPECT_EQ(sum.checked, sum.equal + sum.unequal);
        EXPECT_EQ(sum.unequal > 0, sum.first_counterexample.has_value());
        EXPECT_EQ(static_cast<std::size_t>(sum.checked + sum.skipped), enumerate_grid(lookup(sum.id), g).size());
    }
}

TEST(Sweep, MutationCaughtAtFirstAdmissiblePoint) {
    SweepOptions o;
    o.mutate_rhs = {"conv-sq"};
    const auto s = sweep({"conv-sq"}, GridSpec{}, o);
    ASSERT_GE(s[0].unequal, 1);
    EXPECT_EQ(s[0].first_counterexample->assignment, "n=0");
    EXPECT_EQ(judge(s, o).exit_code, 1);

    o.stop_at_first_unequal = true;
    const auto t = sweep({"conv-sq"}, GridSpec{}, o);
    EXPECT_EQ(t[0].unequal, 1);
    EXPECT_EQ(t[0].checked, 1);
}

TEST(Sweep, ParallelismDoesNotChangeReports) {
    const std::vector<std::string> ids = {"comb-H-G", "gould-H", "bt3", "gq-cor-m0-part", "rec-quad"};
    GridSpec g = with("", 10);
    SweepOptions one, many;
    one.keep_reports = many.keep_reports = true;
    many.jobs = 8;
    const auto a = report_json(sweep(ids, g, one), g, true);
    const auto b = report_json(sweep(ids, g, many), g, true);
    EXPECT_EQ(a, b);

    one.stop_at_first_unequal = many.stop_at_first_unequal = true;
    EXPECT_EQ(report_json(sweep(ids, g, one), g, true), report_json(sweep(ids, g, many), g, true));
}

TEST(Sweep, CounterexamplesPersistOnLargerGrids) {
    const auto small = sweep({"gould-O"}, with("", 3));
    const auto large = sweep({"gould-O"}, with("", 12));
    ASSERT_TRUE(small[0].first_counterexample);
    ASSERT_TRUE(large[0].first_counterexample);
    EXPECT_EQ(small[0].first_counterexample->assignment, large[0].first_counterexample->assignment);
}

TEST(Judge, DiscrepancyMustReproduce) {
    // a narrowed grid that misses the counterexample still passes: the stored
    // counterexample is re-evaluated directly
    const auto s = sweep({"shift-simple"}, with("s=1", 6));
    EXPECT_EQ(s[0].unequal, 0);
    EXPECT_EQ(judge(s).exit_code, 0);
    SweepOptions o;
    o.mutate_rhs = {"shift-simple"};
    EXPECT_EQ(judge(s, o).exit_code, 1);
}

TEST(Audit, ConfirmsConvolution) {
    const auto r = audit({"conv-sq"}, GridSpec{});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].status.confirmed);
    EXPECT_EQ(r[0].points, 25);
}

TEST(Audit, MisEncodedEntryIsAnEncodingBug) {
    IdentityEntry e = lookup("conv-sq");
    auto rhs = e.rhs;
    e.rhs = [rhs](const Assignment& a) { return rhs(a) + LogValue(Rational(1, 7)); };
    try {
        audit_entry(e, GridSpec{});
        FAIL() << "expected EncodingBug";
    } catch (const EncodingBug& err) {
        const std::string what = err.what();
        EXPECT_NE(what.find("conv-sq rhs at n=0"), std::string::npos) << what;
    }
}

TEST(Audit, SubscriptReadingDecided) {
    const auto r = audit({"gq-cor-m0-part"}, with("", 6));
    EXPECT_FALSE(r[0].status.confirmed);
    EXPECT_EQ(r[0].status.surviving_readings, std::vector<std::string>{"tk-s"});
    const auto committed = lookup("gq-cor-m0-part").status();
    ASSERT_TRUE(committed);
    EXPECT_EQ(committed->surviving_readings, std::vector<std::string>{"tk-s"});
}

TEST(Audit, MinimalCounterexampleIsLexicographicallyFirst) {
    const auto& e = lookup("shift-simple");
    const auto r = audit_entry(e, GridSpec{});
    ASSERT_TRUE(r.status.counterexample);
    const auto ce = parse_assignment(e, r.status.counterexample->assignment);
    for (const auto& p : enumerate_grid(e, GridSpec{})) {
        if (!assignment_less(e, p, ce)) break;
        EXPECT_EQ(evaluate(e, p).outcome == Outcome::Unequal, false) << p.to_string();
    }
    EXPECT_EQ(r.status.counterexample->assignment, e.status()->counterexample->assignment);
}

TEST(Report, JsonShapeAndTsv) {
    const auto g = with("n=1..3");
    SweepOptions o;
    o.keep_reports = true;
    const auto s = sweep({"rec-FF-part"}, g, o);
    const auto doc = nlohmann::json::parse(report_json(s, g, true));
    EXPECT_EQ(doc["tool_version"], kToolVersion);
    EXPECT_EQ(doc["grid"]["overrides"]["n"], "1..3");
    ASSERT_EQ(doc["summaries"].size(), 1u);
    const auto& sum = doc["summaries"][0];
    for (const char* k : {"id", "family", "paper_anchor", "checked", "equal", "unequal", "skipped",
                          "first_counterexample", "elapsed_ms"}) {
        EXPECT_TRUE(sum.contains(k)) << k;
    }
    EXPECT_EQ(doc["reports"].size(), 3u);
    EXPECT_FALSE(nlohmann::json::parse(report_json(s, g, false)).contains("reports"));

    const auto tsv = report_tsv(s, true);
    EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 4);
    EXPECT_NE(tsv.find("rec-FF-part\tn=1\t-1\t-1\tEQUAL\t\n"), std::string::npos) << tsv;
}
