#include "fibharm/registry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "catalog/catalog.hpp"

namespace fibharm {

std::string_view to_string(ParamKind k) {
    switch (k) {
        case ParamKind::Int: return "int";
        case ParamKind::HalfInt: return "halfint";
        case ParamKind::Rational: return "rational";
        case ParamKind::Seed: return "seed";
    }
    return "?";
}

std::string render(const ParamValue& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
            else return x.to_string();
        },
        v);
}

ParamValue parse_value(ParamKind kind, std::string_view text) {
    switch (kind) {
        case ParamKind::Int: {
            const Rational q = Rational::parse(text);
            if (!q.is_integer() || !q.num().fits_slong_p()) {
                throw ParseError("expected an integer, got '" + std::string(text) + "'");
            }
            return std::int64_t{q.num().get_si()};
        }
        case ParamKind::HalfInt:
            try {
                return HalfInt::parse(text);
            } catch (const DomainError& e) {
                throw ParseError(e.what());
            }
        case ParamKind::Rational: return Rational::parse(text);
        case ParamKind::Seed: return GibonacciSeed::parse(text);
    }
    throw ParseError("unknown parameter kind");
}

void Assignment::set(const std::string& name, ParamValue value) {
    for (auto& [k, v] : items_) {
        if (k == name) {
            v = std::move(value);
            return;
        }
    }
    items_.emplace_back(name, std::move(value));
}

bool Assignment::has(std::string_view name) const {
    return std::any_of(items_.begin(), items_.end(), [&](const auto& kv) { return kv.first == name; });
}

const ParamValue& Assignment::get(std::string_view name) const {
    for (const auto& [k, v] : items_) {
        if (k == name) return v;
    }
    throw BadAssignment("parameter '" + std::string(name) + "' is not assigned");
}

std::int64_t Assignment::i(std::string_view name) const {
    const ParamValue& v = get(name);
    if (const auto* x = std::get_if<std::int64_t>(&v)) return *x;
    if (const auto* h = std::get_if<HalfInt>(&v); h && h->is_integer()) return h->to_integer();
    throw BadAssignment("parameter '" + std::string(name) + "' must be an integer, got " + render(v));
}

HalfInt Assignment::h(std::string_view name) const {
    const ParamValue& v = get(name);
    if (const auto* x = std::get_if<HalfInt>(&v)) return *x;
    if (const auto* x = std::get_if<std::int64_t>(&v)) return HalfInt(*x);
    throw BadAssignment("parameter '" + std::string(name) + "' must be in Z/2, got " + render(v));
}

Rational Assignment::q(std::string_view name) const {
    const ParamValue& v = get(name);
    if (const auto* x = std::get_if<Rational>(&v)) return *x;
    if (const auto* x = std::get_if<std::int64_t>(&v)) return Rational(static_cast<long>(*x));
    if (const auto* x = std::get_if<HalfInt>(&v)) return x->to_rational();
    throw BadAssignment("parameter '" + std::string(name) + "' must be rational, got " + render(v));
}

const GibonacciSeed& Assignment::seed(std::string_view name) const {
    const ParamValue& v = get(name);
    if (const auto* x = std::get_if<GibonacciSeed>(&v)) return *x;
    throw BadAssignment("parameter '" + std::string(name) + "' must be a seed g0:g1");
}

std::string Assignment::to_string() const {
    std::string out;
    for (const auto& [k, v] : items_) {
        if (!out.empty()) out += ',';
        out += k + "=" + render(v);
    }
    return out;
}

const ParamSpec& ParamSchema::spec(std::string_view name) const {
    for (const auto& p : params) {
        if (p.name == name) return p;
    }
    throw BadAssignment("unknown parameter '" + std::string(name) + "'");
}

std::string ParamSchema::describe() const {
    std::string out;
    for (const auto& p : params) {
        if (!out.empty()) out += "; ";
        out += p.name + ":" + std::string(fibharm::to_string(p.kind));
        if (!p.domain.empty()) out += " " + p.domain;
    }
    return out;
}

namespace {

bool kind_matches(ParamKind kind, const ParamValue& v) {
    switch (kind) {
        case ParamKind::Int: return std::holds_alternative<std::int64_t>(v);
        case ParamKind::HalfInt:
            return std::holds_alternative<HalfInt>(v) || std::holds_alternative<std::int64_t>(v);
        case ParamKind::Rational: return !std::holds_alternative<GibonacciSeed>(v);
        case ParamKind::Seed: return std::holds_alternative<GibonacciSeed>(v);
    }
    return false;
}

}  // namespace

std::optional<std::string> violation(const IdentityEntry& entry, const Assignment& a) {
    for (const auto& p : entry.params.params) {
        if (!a.has(p.name)) return "missing parameter '" + p.name + "'";
        if (!kind_matches(p.kind, a.get(p.name))) {
            return "parameter '" + p.name + "' must be of kind " + std::string(to_string(p.kind));
        }
    }
    for (const auto& [k, v] : a.items()) {
        (void)v;
        const auto& ps = entry.params.params;
        if (std::none_of(ps.begin(), ps.end(), [&](const auto& p) { return p.name == k; })) {
            return "'" + entry.id + "' has no parameter '" + k + "'";
        }
    }
    if (entry.params.constraint) return entry.params.constraint(a);
    return std::nullopt;
}

void validate(const IdentityEntry& entry, const Assignment& a) {
    if (auto why = violation(entry, a)) throw BadAssignment(entry.id + " at " + a.to_string() + ": " + *why);
}

namespace {

// Evaluates one side; a pole or a vanishing denominator becomes a skip reason.
std::optional<LogValue> side(const Evaluator& f, const Assignment& a, std::string& reason, const char* tag) {
    try {
        return f(a);
    } catch (const HarmonicPole& e) {
        reason = std::string(tag) + ": " + e.what();
    } catch (const DivisionByZero& e) {
        reason = std::string(tag) + ": " + e.what();
    } catch (const UnsupportedBinomial& e) {
        reason = std::string(tag) + ": " + e.what();
    }
    return std::nullopt;
}

}  // namespace

CheckReport evaluate(const IdentityEntry& entry, const Assignment& a, const EvalOptions& options) {
    validate(entry, a);
    const Evaluator& lf = options.reading ? options.reading->lhs : entry.lhs;
    const Evaluator& rf = options.reading ? options.reading->rhs : entry.rhs;
    const std::string id = options.reading ? entry.id + "[" + options.reading->name + "]" : entry.id;
    std::string reason;
    auto lhs = side(lf, a, reason, "lhs");
    if (!lhs) return CheckReport::skipped(id, a.to_string(), reason);
    auto rhs = side(rf, a, reason, "rhs");
    if (!rhs) return CheckReport::skipped(id, a.to_string(), reason);
    if (options.mutate_rhs) *rhs += LogValue(1);
    return CheckReport::compare(id, a.to_string(), std::move(*lhs), std::move(*rhs));
}

const std::vector<IdentityEntry>& registry_entries() {
    static const std::vector<IdentityEntry> entries = [] {
        std::vector<IdentityEntry> all;
        for (auto part : {catalog::abel_fib_entries, catalog::abel_comb_entries, catalog::gould_entries,
                          catalog::boyad_entries, catalog::gq_entries}) {
            auto v = part();
            std::move(v.begin(), v.end(), std::back_inserter(all));
        }
        std::set<std::string> seen;
        for (const auto& e : all) {
            if (!seen.insert(e.id).second) throw EncodingBug("duplicate registry id " + e.id);
        }
        return all;
    }();
    return entries;
}

const IdentityEntry& lookup(std::string_view id) {
    for (const auto& e : registry_entries()) {
        if (e.id == id) return e;
    }
    throw NotFound("no identity with id '" + std::string(id) + "'");
}

std::vector<std::string> registry_families() {
    std::vector<std::string> out;
    for (const auto& e : registry_entries()) {
        if (std::find(out.begin(), out.end(), e.family) == out.end()) out.push_back(e.family);
    }
    return out;
}

}  // namespace fibharm
