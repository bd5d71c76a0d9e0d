// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fibharm/harmonic.hpp"
#include "fibharm/registry.hpp"
#include "fibharm/report.hpp"
#include "fibharm/transforms.hpp"
#include "fibharm/verifier.hpp"

using namespace fibharm;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_s(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

std::size_t count(const std::vector<CheckReport>& v, Outcome o) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [o](const auto& r) { return r.outcome == o; }));
}

Result suite_result(const std::vector<CheckReport>& v, double elapsed, double budget) {
    const auto bad = count(v, Outcome::Unequal);
    std::string first;
    for (const auto& r : v) {
        if (r.outcome == Outcome::Unequal) {
            first = ", first " + r.id + " at " + r.assignment;
            break;
        }
    }
    return {bad == 0 && elapsed < budget, std::to_string(v.size()) + " checks, " + std::to_string(bad) + " unequal, " +
                                              std::to_string(count(v, Outcome::Skipped)) + " skipped" + first + ", " +
                                              fmt_s(elapsed)};
}

Result c1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = lemma2_suite(200);
    return suite_result(v, seconds_since(t0), 1.0);
}

Result c2() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = lemma3_suite(25);
    return suite_result(v, seconds_since(t0), 1.0);
}

Result c3() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto v = halfint_reduction_suite(10, 15);
    return suite_result(v, seconds_since(t0), 5.0);
}

Result c4() {
    std::mt19937_64 rng(20240401);
    std::uniform_int_distribution<std::int64_t> len(0, 40);
    std::size_t bad = 0, checks = 0;
    for (int i = 0; i < 200; ++i) {
        const std::int64_t n = len(rng);
        const auto a = random_rational_sequence(rng, 1, static_cast<std::size_t>(n + 1));
        const auto b = random_rational_sequence(rng, 1, static_cast<std::size_t>(n + 1));
        for (auto variant : {AbelVariant::Difference, AbelVariant::Sum}) {
            ++checks;
            if (!abel_check(a, b, n, variant).equal()) ++bad;
        }
    }
    return {bad == 0, std::to_string(checks) + " checks over 200 pairs, " + std::to_string(bad) + " unequal"};
}

Result c5() {
    std::mt19937_64 rng(7005);
    std::uniform_int_distribution<std::size_t> len(1, 26);
    std::size_t bad = 0;
    for (int i = 0; i < 100; ++i) {
        const auto s = random_rational_sequence(rng, 0, len(rng));
        if (!(binomial_transform(binomial_transform(s)) == s)) ++bad;
    }
    GridSpec g;
    g.context.n_max = 20;
    parse_overrides("t=-3..3,r=-3..3", g);
    const auto s = sweep({"bt-G-scaled"}, g);
    const bool ok = bad == 0 && s[0].unequal == 0 && s[0].checked > 0;
    return {ok, "involution " + std::to_string(100 - bad) + "/100; closed form " + std::to_string(s[0].equal) + "/" +
                    std::to_string(s[0].checked) + " equal, " + std::to_string(s[0].skipped) + " skipped"};
}

Result c6() {
    struct Spot {
        const char* id;
        const char* point;
        const char* value;
    };
    const Spot spots[] = {{"rec-FF-part", "n=1", "-1"},
                          {"conv-sq", "n=2", "1"},
                          {"boyad-HF-part", "n=2", "-1/2"},
                          {"rec-odd-part", "n=1", "2/3"}};
    std::string detail;
    bool ok = true;
    for (const auto& sp : spots) {
        const auto& e = lookup(sp.id);
        const auto r = evaluate(e, parse_assignment(e, sp.point));
        const bool good = r.equal() && r.lhs->to_string() == sp.value;
        ok = ok && good;
        detail += std::string(detail.empty() ? "" : "; ") + sp.id + " " + (r.lhs ? r.lhs->to_string() : "?") + " = " +
                  (r.rhs ? r.rhs->to_string() : "?");
    }
    return {ok, detail};
}

std::vector<std::string> all_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry_entries()) ids.push_back(e.id);
    return ids;
}

std::string first_report;  // kept for criterion 10

Result c7() {
    const auto t0 = std::chrono::steady_clock::now();
    SweepOptions o;
    o.keep_reports = true;
    const GridSpec g;
    const auto s = sweep(all_ids(), g, o);
    const double elapsed = seconds_since(t0);
    const Verdict v = judge(s, o);
    first_report = report_json(s, g, true);
    std::int64_t confirmed = 0, discrepancy = 0, checked = 0;
    for (const auto& x : s) {
        checked += x.checked;
        (lookup(x.id).status()->confirmed ? confirmed : discrepancy) += 1;
    }
    std::string detail = std::to_string(confirmed) + " ConfirmedPass clean, " + std::to_string(discrepancy) +
                         " Discrepancy reproduced, " + std::to_string(checked) + " points checked, " + fmt_s(elapsed);
    if (!v.problems.empty()) detail += "; " + v.problems.front();
    return {v.exit_code == 0 && elapsed < 300.0, detail};
}

Result c8() {
    std::size_t bad = 0, checks = 0;
    auto side = [](const char* id, bool left, const std::string& p) {
        const auto& e = lookup(id);
        const auto a = parse_assignment(e, p);
        return left ? e.lhs(a) : e.rhs(a);
    };
    for (int n = 0; n <= 20; ++n) {
        for (const char* seed : {"0:1", "2:1"}) {
            const std::string p = "n=" + std::to_string(n) + ",seed=" + seed;
            const LogValue l1 = side("prop1-ln2-a", true, p), r1 = side("prop1-ln2-a", false, p);
            const LogValue l2 = side("prop1-ln2-b", true, p), r2 = side("prop1-ln2-b", false, p);
            const bool eq[] = {
                LogValue(l1.log2) == 2 * side("prop1-a", true, p),
                LogValue(r1.log2) == 2 * side("prop1-a", false, p),
                LogValue(l1.rat) == -2 * side("prop1-b", true, p),
                LogValue(r1.rat) == -2 * side("prop1-b", false, p),
                LogValue(l2.log2) == 2 * side("prop2-a", false, p),
                LogValue(r2.log2) == 2 * side("prop2-a", true, p),
                LogValue(l2.rat) == 2 * side("prop2-b", false, p),
                LogValue(r2.rat) == 2 * side("prop2-b", true, p),
            };
            for (bool b : eq) {
                ++checks;
                if (!b) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(checks) + " component comparisons, " + std::to_string(bad) + " mismatched"};
}

Result c9() {
    std::size_t caught = 0, total = 0;
    std::string missed;
    const GridSpec g;
    for (const auto& e : registry_entries()) {
        SweepOptions o;
        o.mutate_rhs = {e.id};
        o.stop_at_first_unequal = true;
        ++total;
        if (judge(sweep({e.id}, g, o), o).exit_code == 1) ++caught;
        else missed += " " + e.id;
    }
    return {caught == total, std::to_string(caught) + "/" + std::to_string(total) + " mutants exit 1" +
                                 (missed.empty() ? "" : "; missed:" + missed)};
}

Result c10() {
    SweepOptions o;
    o.keep_reports = true;
    o.jobs = 4;
    const GridSpec g;
    const auto second = report_json(sweep(all_ids(), g, o), g, true);
    return {!first_report.empty() && second == first_report,
            "jobs=1 vs jobs=4 verbose reports, " + std::to_string(second.size()) + " bytes, " +
                (second == first_report ? "identical" : "different")};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Result()>>> criteria = {
        {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}};
    int failed = 0;
    for (const auto& [n, fn] : criteria) {
        Result r;
        try {
            r = fn();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        if (!r.pass) ++failed;
        std::printf("criterion %d: %s (%s)\n", n, r.pass ? "PASS" : "FAIL", r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 10 criteria pass\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
