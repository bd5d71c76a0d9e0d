#pragma once

// The identity catalog: one entry per displayed identity with its parameter
// schema, default grid and exact evaluators for both sides.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "fibharm/check_report.hpp"
#include "fibharm/exact.hpp"
#include "fibharm/sequences.hpp"

namespace fibharm {

enum class ParamKind { Int, HalfInt, Rational, Seed };

std::string_view to_string(ParamKind k);

using ParamValue = std::variant<std::int64_t, HalfInt, Rational, GibonacciSeed>;

std::string render(const ParamValue& v);
/// Parses one value of the given kind ("3", "-1/2", "2/3", "0:1").
ParamValue parse_value(ParamKind kind, std::string_view text);

/// Ordered name -> value map, rendered "n=3,r=0,seed=0:1".
class Assignment {
public:
    Assignment() = default;

    void set(const std::string& name, ParamValue value);
    bool has(std::string_view name) const;
    /// BadAssignment when missing.
    const ParamValue& get(std::string_view name) const;

    std::int64_t i(std::string_view name) const;
    HalfInt h(std::string_view name) const;
    Rational q(std::string_view name) const;
    const GibonacciSeed& seed(std::string_view name = "seed") const;

    const std::vector<std::pair<std::string, ParamValue>>& items() const { return items_; }
    std::string to_string() const;

private:
    std::vector<std::pair<std::string, ParamValue>> items_;
};

/// Knobs that the default samplers consult.
struct SampleContext {
    std::int64_t n_max = 24;
};

using Sampler = std::function<std::vector<ParamValue>(const Assignment& prefix, const SampleContext& ctx)>;

struct ParamSpec {
    std::string name;
    ParamKind kind;
    std::string domain;  // shown by `list`
    Sampler samples;
};

struct ParamSchema {
    std::vector<ParamSpec> params;
    /// Violation message, or nullopt when the assignment is admissible.
    std::function<std::optional<std::string>(const Assignment&)> constraint;

    const ParamSpec& spec(std::string_view name) const;
    std::string describe() const;
};

using Evaluator = std::function<LogValue(const Assignment&)>;

/// An alternative transcription of a display, checked by the audit.
struct Reading {
    std::string name;
    Evaluator lhs;
    Evaluator rhs;
};

struct Counterexample {
    std::string assignment;
    std::string lhs;
    std::string rhs;
};

struct AuditedStatus {
    bool confirmed = false;                      // ConfirmedPass vs Discrepancy
    std::optional<Counterexample> counterexample;  // set iff !confirmed
    std::vector<std::string> surviving_readings;   // alternative readings with no counterexample
};

struct IdentityEntry {
    std::string id;
    std::string family;
    std::string anchor;
    ParamSchema params;
    Evaluator lhs;
    Evaluator rhs;
    std::vector<Reading> readings;

    /// Committed audit result; nullopt for an entry that was never audited.
    std::optional<AuditedStatus> status() const;
};

const std::vector<IdentityEntry>& registry_entries();
/// NotFound for an unknown id.
const IdentityEntry& lookup(std::string_view id);
std::vector<std::string> registry_families();

struct EvalOptions {
    bool mutate_rhs = false;  // adds 1 to the right-hand side
    const Reading* reading = nullptr;
};

/// Evaluates both sides at one point. BadAssignment when the assignment does
/// not match the schema; poles and vanishing denominators give Skipped.
CheckReport evaluate(const IdentityEntry& entry, const Assignment& assignment, const EvalOptions& options = {});

/// Checks names, kinds and the entry's constraint; BadAssignment on failure.
void validate(const IdentityEntry& entry, const Assignment& assignment);
/// Same as validate() without throwing: the violation message, if any.
std::optional<std::string> violation(const IdentityEntry& entry, const Assignment& assignment);

}  // namespace fibharm
