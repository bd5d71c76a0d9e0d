#pragma once

// Grid construction, parallel sweeps, the oracle audit and the verify rule.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibharm/check_report.hpp"
#include "fibharm/registry.hpp"

namespace fibharm {

/// Default samplers plus per-name overrides. An override token is a
/// '|'-separated list of items, each a value ("3", "-1/2", "0:1") or an
/// inclusive range "a..b" stepped by 1.
struct GridSpec {
    SampleContext context;
    std::map<std::string, std::string> overrides;
};

/// Parses "n=1..60,seed=0:1|2:1" into overrides (merged into `into`).
/// ParseError on malformed text.
void parse_overrides(std::string_view text, GridSpec& into);

/// Admissible assignments of one entry, constraint-filtered, deduplicated and
/// sorted lexicographically over the schema's parameter order.
std::vector<Assignment> enumerate_grid(const IdentityEntry& entry, const GridSpec& grid);

/// Parses "n=3,r=0,seed=0:1" against the entry's schema (kinds from the schema).
Assignment parse_assignment(const IdentityEntry& entry, std::string_view text);

/// Numeric lexicographic order in the schema's parameter order.
bool assignment_less(const IdentityEntry& entry, const Assignment& a, const Assignment& b);

struct SweepOptions {
    int jobs = 1;
    bool stop_at_first_unequal = false;
    bool keep_reports = false;
    bool timing = false;  // fill elapsed_ms; off keeps reports byte-stable
    std::vector<std::string> mutate_rhs;  // ids whose RHS gets +1
};

struct SweepSummary {
    std::string id;
    std::string family;
    std::string anchor;
    std::int64_t checked = 0;
    std::int64_t equal = 0;
    std::int64_t unequal = 0;
    std::int64_t skipped = 0;
    std::optional<CheckReport> first_counterexample;
    std::int64_t elapsed_ms = 0;
    std::vector<CheckReport> reports;  // only with keep_reports
};

/// Evaluates every admissible grid point once; NotFound for an unknown id.
/// Results do not depend on `jobs`. Summaries come back sorted by id.
std::vector<SweepSummary> sweep(const std::vector<std::string>& ids, const GridSpec& grid,
                                const SweepOptions& options = {});

struct AuditResult {
    std::string id;
    AuditedStatus status;
    std::int64_t points = 0;
    std::int64_t skipped = 0;
    std::vector<std::string> refuted_readings;
};

/// Cross-checks each side against the oracle point by point (EncodingBug on a
/// mismatch, naming the entry, side and point), then classifies the entry.
std::vector<AuditResult> audit(const std::vector<std::string>& ids, const GridSpec& grid, int jobs = 1);
/// Audit of a single (possibly modified) entry against the oracle formula of entry.id.
AuditResult audit_entry(const IdentityEntry& entry, const GridSpec& grid, int jobs = 1);

/// Serialized form of data/audited_status.json.
std::string audited_status_json(const std::vector<AuditResult>& results);

struct Verdict {
    int exit_code = 0;  // 0 or 1
    std::vector<std::string> problems;
};

/// ConfirmedPass needs unequal = 0; a Discrepancy entry's stored counterexample
/// must reproduce exactly; an unaudited entry must have unequal = 0.
Verdict judge(const std::vector<SweepSummary>& summaries, const SweepOptions& options = {});

}  // namespace fibharm
