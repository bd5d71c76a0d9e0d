#include <map>
#include "json.hpp"

#include "fibharm/errors.hpp"
#include "fibharm/registry.hpp"
#include "generated/audited_status.hpp"

namespace fibharm {

namespace {

using Table = std::map<std::string, AuditedStatus, std::less<>>;

Table load() {
    Table out;
    const auto doc = nlohmann::json::parse(generated::kAuditedStatusJson);
    for (const auto& [id, e] : doc.at("entries").items()) {
        AuditedStatus s;
        const std::string status = e.at("status").get<std::string>();
        if (status != "ConfirmedPass" && status != "Discrepancy") {
            throw EncodingBug("audited status of " + id + " is '" + status + "'");
        }
        s.confirmed = status == "ConfirmedPass";
        if (e.contains("counterexample") && !e.at("counterexample").is_null()) {
            const auto& c = e.at("counterexample");
            s.counterexample = Counterexample{c.at("assignment").get<std::string>(), c.at("lhs").get<std::string>(),
                                              c.at("rhs").get<std::string>()};
        }
        if (e.contains("surviving_readings")) {
            s.surviving_readings = e.at("surviving_readings").get<std::vector<std::string>>();
        }
        out.emplace(id, std::move(s));
    }
    return out;
}

}  // namespace

std::optional<AuditedStatus> IdentityEntry::status() const {
    static const Table table = load();
    if (auto it = table.find(id); it != table.end()) return it->second;
    return std::nullopt;
}

}  // namespace fibharm
