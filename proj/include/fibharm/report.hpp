#pragma once

#include <string>
#include <vector>

#include "fibharm/verifier.hpp"

namespace fibharm {

inline constexpr const char* kToolVersion = "0.1.0";

/// Report document; per-point reports only when `verbose`.
std::string report_json(const std::vector<SweepSummary>& summaries, const GridSpec& grid, bool verbose);

/// One CheckReport per row: id, assignment, lhs, rhs, outcome, skip_reason.
/// Without per-point reports, each summary's first counterexample is listed.
std::string report_tsv(const std::vector<SweepSummary>& summaries, bool verbose);

}  // namespace fibharm
