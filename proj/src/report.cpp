#include "fibharm/report.hpp"

#include "json.hpp"

namespace fibharm {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const CheckReport& r) {
    Json j;
    j["id"] = r.id;
    j["assignment"] = r.assignment;
    j["lhs"] = r.lhs ? Json(r.lhs->to_string()) : Json(nullptr);
    j["rhs"] = r.rhs ? Json(r.rhs->to_string()) : Json(nullptr);
    j["outcome"] = std::string(to_string(r.outcome));
    j["skip_reason"] = r.skip_reason.empty() ? Json(nullptr) : Json(r.skip_reason);
    return j;
}

// Tabs and newlines never occur in renderings, but skip reasons are free text.
std::string cell(std::string s) {
    for (char& c : s) {
        if (c == '\t' || c == '\n') c = ' ';
    }
    return s;
}

void tsv_row(std::string& out, const CheckReport& r) {
    out += cell(r.id) + '\t' + cell(r.assignment) + '\t' + (r.lhs ? r.lhs->to_string() : "") + '\t' +
           (r.rhs ? r.rhs->to_string() : "") + '\t' + std::string(to_string(r.outcome)) + '\t' + cell(r.skip_reason) +
           '\n';
}

}  // namespace

std::string report_json(const std::vector<SweepSummary>& summaries, const GridSpec& grid, bool verbose) {
    Json doc;
    doc["tool_version"] = kToolVersion;
    Json g;
    g["n_max"] = grid.context.n_max;
    g["overrides"] = Json::object();
    for (const auto& [k, v] : grid.overrides) g["overrides"][k] = v;
    doc["grid"] = std::move(g);
    doc["summaries"] = Json::array();
    for (const auto& s : summaries) {
        Json j;
        j["id"] = s.id;
        j["family"] = s.family;
        j["paper_anchor"] = s.anchor;
        j["checked"] = s.checked;
        j["equal"] = s.equal;
        j["unequal"] = s.unequal;
        j["skipped"] = s.skipped;
        j["first_counterexample"] = s.first_counterexample ? to_json(*s.first_counterexample) : Json(nullptr);
        j["elapsed_ms"] = s.elapsed_ms;
        doc["summaries"].push_back(std::move(j));
    }
    if (verbose) {
        doc["reports"] = Json::array();
        for (const auto& s : summaries) {
            for (const auto& r : s.reports) doc["reports"].push_back(to_json(r));
        }
    }
    return doc.dump(2) + "\n";
}

std::string report_tsv(const std::vector<SweepSummary>& summaries, bool verbose) {
    std::string out = "id\tassignment\tlhs\trhs\toutcome\tskip_reason\n";
    for (const auto& s : summaries) {
        if (verbose) {
            for (const auto& r : s.reports) tsv_row(out, r);
        } else if (s.first_counterexample) {
            tsv_row(out, *s.first_counterexample);
        }
    }
    return out;
}

}  // namespace fibharm
