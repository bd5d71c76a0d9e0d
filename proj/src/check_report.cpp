#include "fibharm/check_report.hpp"

#include <utility>

namespace fibharm {

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Equal: return "EQUAL";
        case Outcome::Unequal: return "UNEQUAL";
        case Outcome::Skipped: return "SKIPPED";
    }
    return "?";
}

CheckReport CheckReport::compare(std::string id, std::string assignment, LogValue lhs, LogValue rhs) {
    CheckReport r;
    r.id = std::move(id);
    r.assignment = std::move(assignment);
    r.outcome = lhs == rhs ? Outcome::Equal : Outcome::Unequal;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

CheckReport CheckReport::skipped(std::string id, std::string assignment, std::string reason) {
    CheckReport r;
    r.id = std::move(id);
    r.assignment = std::move(assignment);
    r.outcome = Outcome::Skipped;
    r.skip_reason = std::move(reason);
    return r;
}

}  // namespace fibharm
