#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "fibharm/exact.hpp"

namespace fibharm {

enum class Outcome { Equal, Unequal, Skipped };

std::string_view to_string(Outcome o);

/// Result of evaluating one identity (or relation) at one parameter point.
struct CheckReport {
    std::string id;
    std::string assignment;
    std::optional<LogValue> lhs;
    std::optional<LogValue> rhs;
    Outcome outcome = Outcome::Skipped;
    std::string skip_reason;
    std::int64_t elapsed_us = 0;

    bool equal() const { return outcome == Outcome::Equal; }

    /// Builds an Equal/Unequal report from two computed sides.
    static CheckReport compare(std::string id, std::string assignment, LogValue lhs, LogValue rhs);
    static CheckReport skipped(std::string id, std::string assignment, std::string reason);
};

}  // namespace fibharm
