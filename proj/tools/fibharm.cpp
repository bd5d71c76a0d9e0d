// fibharm: list, verify, eval and audit the identity catalog.
// Exit codes: 0 ok, 1 identity discrepancy, 2 usage error, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "CLI11.hpp"
#include "fibharm/errors.hpp"
#include "fibharm/registry.hpp"
#include "fibharm/report.hpp"
#include "fibharm/verifier.hpp"

using namespace fibharm;

namespace {

struct Selection {
    std::vector<std::string> ids;
    std::vector<std::string> families;
};

struct GridFlags {
    std::vector<std::string> sets;
    std::int64_t n_max = 24;
    int jobs = 1;
};

std::vector<std::string> selected_ids(const Selection& sel) {
    std::set<std::string> known_families;
    for (const auto& f : registry_families()) known_families.insert(f);
    for (const auto& f : sel.families) {
        if (!known_families.count(f)) throw NotFound("no family named '" + f + "'");
    }
    std::vector<std::string> out;
    for (const auto& id : sel.ids) out.push_back(lookup(id).id);
    for (const auto& e : registry_entries()) {
        const bool by_family = std::find(sel.families.begin(), sel.families.end(), e.family) != sel.families.end();
        if (by_family) out.push_back(e.id);
    }
    if (sel.ids.empty() && sel.families.empty()) {
        for (const auto& e : registry_entries()) out.push_back(e.id);
    }
    return out;
}

GridSpec grid_from(const GridFlags& g) {
    if (g.n_max < 0) throw ParseError("--n-max must be >= 0");
    GridSpec spec;
    spec.context.n_max = g.n_max;
    for (const auto& s : g.sets) parse_overrides(s, spec);
    return spec;
}

std::string status_text(const IdentityEntry& e) {
    const auto st = e.status();
    if (!st) return "unaudited";
    std::string out = st->confirmed ? "ConfirmedPass" : "Discrepancy(" + st->counterexample->assignment + ")";
    for (const auto& r : st->surviving_readings) out += " reading[" + r + "]";
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

void add_selection(CLI::App* cmd, Selection& sel) {
    cmd->add_option("--ids", sel.ids, "Identity ids")->delimiter(',');
    cmd->add_option("--id", sel.ids, "Identity id (repeatable)");
    cmd->add_option("--family", sel.families, "Family name (repeatable)")->delimiter(',');
}

void add_grid(CLI::App* cmd, GridFlags& g) {
    cmd->add_option("--set", g.sets, "Grid override name=value (a..b ranges, p/2, g0:g1, '|' lists)");
    cmd->add_option("--n-max", g.n_max, "Upper end of the default n range");
    cmd->add_option("--jobs,-j", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Fibonacci-harmonic summation identities"};
    app.require_subcommand(1);

    Selection list_sel;
    auto* list = app.add_subcommand("list", "One line per registry entry");
    add_selection(list, list_sel);

    Selection verify_sel;
    GridFlags verify_grid;
    std::string report_path;
    std::string format = "json";
    bool verbose = false, timing = false, stop_first = false;
    std::vector<std::string> mutate;
    auto* verify = app.add_subcommand("verify", "Sweep identities over their grids");
    add_selection(verify, verify_sel);
    add_grid(verify, verify_grid);
    verify->add_option("--report", report_path, "Report path (default: $FIBHARM_REPORT)");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
    verify->add_flag("--verbose", verbose, "Include per-point reports");
    verify->add_flag("--timing", timing, "Record elapsed_ms (reports are then not byte-stable)");
    verify->add_flag("--stop-at-first-unequal", stop_first, "Stop each sweep at its first inequality");
    verify->add_option("--mutate-rhs", mutate, "Add 1 to this identity's right-hand side (canary)")->delimiter(',');

    std::string eval_id;
    std::vector<std::string> eval_sets;
    std::vector<std::string> eval_mutate;
    auto* eval = app.add_subcommand("eval", "Evaluate one identity at one point");
    eval->add_option("--id", eval_id, "Identity id")->required();
    eval->add_option("--set", eval_sets, "name=value assignments")->required();
    eval->add_option("--mutate-rhs", eval_mutate, "Add 1 to the right-hand side of this id")->delimiter(',');

    Selection audit_sel;
    GridFlags audit_grid;
    std::string audit_write;
    auto* audit_cmd = app.add_subcommand("audit", "Cross-check the registry against the oracle and classify");
    add_selection(audit_cmd, audit_sel);
    add_grid(audit_cmd, audit_grid);
    audit_cmd->add_option("--write", audit_write, "Write the audited status JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& id : selected_ids(list_sel)) {
                const auto& e = lookup(id);
                std::cout << e.id << '\t' << e.family << '\t' << e.anchor << '\t' << e.params.describe() << '\t'
                          << status_text(e) << '\n';
            }
            return 0;
        }

        if (*verify) {
            const GridSpec grid = grid_from(verify_grid);
            for (const auto& id : mutate) lookup(id);
            SweepOptions opts;
            opts.jobs = verify_grid.jobs;
            opts.keep_reports = verbose;
            opts.timing = timing;
            opts.stop_at_first_unequal = stop_first;
            opts.mutate_rhs = mutate;
            const auto summaries = sweep(selected_ids(verify_sel), grid, opts);
            const Verdict verdict = judge(summaries, opts);

            if (report_path.empty()) {
                if (const char* env = std::getenv("FIBHARM_REPORT")) report_path = env;
            }
            if (!report_path.empty()) {
                write_file(report_path,
                           format == "json" ? report_json(summaries, grid, verbose) : report_tsv(summaries, verbose));
            }
            std::int64_t checked = 0, unequal = 0, skipped = 0;
            for (const auto& s : summaries) {
                checked += s.checked;
                unequal += s.unequal;
                skipped += s.skipped;
            }
            std::cout << summaries.size() << " identities, " << checked << " checked, " << unequal << " unequal, "
                      << skipped << " skipped\n";
            for (const auto& p : verdict.problems) std::cout << "FAIL " << p << '\n';
            return verdict.exit_code;
        }

        if (*eval) {
            const auto& e = lookup(eval_id);
            std::string joined;
            for (const auto& s : eval_sets) joined += (joined.empty() ? "" : ",") + s;
            EvalOptions opts;
            opts.mutate_rhs = std::find(eval_mutate.begin(), eval_mutate.end(), e.id) != eval_mutate.end();
            const CheckReport r = evaluate(e, parse_assignment(e, joined), opts);
            if (r.outcome == Outcome::Skipped) {
                std::cout << "SKIPPED (" << r.skip_reason << ")\n";
                return 0;
            }
            std::cout << "lhs = " << r.lhs->to_string() << ", rhs = " << r.rhs->to_string() << ", "
                      << to_string(r.outcome) << '\n';
            return r.outcome == Outcome::Equal ? 0 : 1;
        }

        if (*audit_cmd) {
            const auto results = audit(selected_ids(audit_sel), grid_from(audit_grid), audit_grid.jobs);
            for (const auto& r : results) {
                std::cout << r.id << '\t' << (r.status.confirmed ? "ConfirmedPass" : "Discrepancy") << '\t'
                          << r.points << " points, " << r.skipped << " skipped";
                if (r.status.counterexample) std::cout << "\tfirst counterexample " << r.status.counterexample->assignment;
                for (const auto& s : r.status.surviving_readings) std::cout << "\treading[" << s << "] holds";
                for (const auto& s : r.refuted_readings) std::cout << "\treading[" << s << "] refuted";
                std::cout << '\n';
            }
            if (!audit_write.empty()) write_file(audit_write, audited_status_json(results));
            return 0;
        }
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BadAssignment& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
