#pragma once

// Independent second evaluator used by the audit. Formulas are plain-text
// expressions interpreted with naive direct summation; nothing here shares
// code with the registry evaluators beyond the LogValue result type.
//
// Grammar: + - * / ^, parentheses, integer literals, parameters by name,
// ln2, F(j) L(j) G(j) H(z) O(j) C(u,l) even(j) odd(j),
// sum(k, lo, hi, body) and prod(k, lo, hi, body). G uses the "seed" parameter.

#include <optional>
#include <string>
#include <string_view>

#include "fibharm/exact.hpp"
#include "fibharm/registry.hpp"

namespace fibharm::oracle {

struct Formula {
    std::string lhs;
    std::string rhs;
};

/// Formula for a registry id, or for "id[reading]"; nullptr when absent.
const Formula* formula_for(std::string_view key);

struct Value {
    std::optional<LogValue> value;
    std::string undefined_reason;  // set when value is empty
};

/// Evaluates one expression at an assignment. Poles, zero denominators and
/// unsupported binomials give an empty value; malformed expressions throw
/// EncodingBug.
Value eval(std::string_view expr, const Assignment& at);

}  // namespace fibharm::oracle
