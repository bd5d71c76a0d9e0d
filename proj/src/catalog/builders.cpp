#include "catalog/catalog.hpp"

namespace fibharm::catalog {

Sampler int_range(Int lo, Int hi) {
    return [lo, hi](const Assignment&, const SampleContext&) {
        std::vector<ParamValue> v;
        for (Int x = lo; x <= hi; ++x) v.emplace_back(x);
        return v;
    };
}

Sampler n_range(Int lo) {
    return [lo](const Assignment&, const SampleContext& ctx) {
        std::vector<ParamValue> v;
        for (Int x = lo; x <= ctx.n_max; ++x) v.emplace_back(x);
        return v;
    };
}

Sampler fixed(std::vector<ParamValue> values) {
    return [values = std::move(values)](const Assignment&, const SampleContext&) { return values; };
}

Sampler halves(std::initializer_list<Int> twice_values) {
    std::vector<ParamValue> v;
    for (Int t : twice_values) v.emplace_back(half(t));
    return fixed(std::move(v));
}

Sampler rationals(std::initializer_list<std::pair<long, long>> values) {
    std::vector<ParamValue> v;
    for (auto [p, q] : values) v.emplace_back(Rational(p, q));
    return fixed(std::move(v));
}

Sampler default_seeds() {
    return fixed({GibonacciSeed(0L, 1L), GibonacciSeed(2L, 1L), GibonacciSeed(1L, 1L), GibonacciSeed(3L, -1L),
                  GibonacciSeed(-2L, 5L)});
}

ParamSpec p_int(std::string name, std::string domain, Sampler s) {
    return {std::move(name), ParamKind::Int, std::move(domain), std::move(s)};
}

ParamSpec p_half(std::string name, std::string domain, Sampler s) {
    return {std::move(name), ParamKind::HalfInt, std::move(domain), std::move(s)};
}

ParamSpec p_rat(std::string name, std::string domain, Sampler s) {
    return {std::move(name), ParamKind::Rational, std::move(domain), std::move(s)};
}

ParamSpec p_seed() { return {"seed", ParamKind::Seed, "g0:g1 not both zero", default_seeds()}; }

Constraint all_of(std::vector<Constraint> cs) {
    return [cs = std::move(cs)](const Assignment& a) -> std::optional<std::string> {
        for (const auto& c : cs) {
            if (auto why = c(a)) return why;
        }
        return std::nullopt;
    };
}

Constraint at_least(std::string name, Int lo) {
    return [name = std::move(name), lo](const Assignment& a) -> std::optional<std::string> {
        if (a.i(name) < lo) return name + " must be >= " + std::to_string(lo);
        return std::nullopt;
    };
}

Constraint odd(std::string name) {
    return [name = std::move(name)](const Assignment& a) -> std::optional<std::string> {
        if (a.i(name) % 2 == 0) return name + " must be odd";
        return std::nullopt;
    };
}

Constraint even(std::string name) {
    return [name = std::move(name)](const Assignment& a) -> std::optional<std::string> {
        if (a.i(name) % 2 != 0) return name + " must be even";
        return std::nullopt;
    };
}

Constraint not_negative_integer(std::string name) {
    return [name = std::move(name)](const Assignment& a) -> std::optional<std::string> {
        const HalfInt h = a.h(name);
        if (h.is_integer() && h.to_integer() < 0) return name + " must not be a negative integer";
        return std::nullopt;
    };
}

IdentityEntry make(std::string id, std::string family, std::string anchor, std::vector<ParamSpec> params,
                   Constraint constraint, Evaluator lhs, Evaluator rhs) {
    IdentityEntry e;
    e.id = std::move(id);
    e.family = std::move(family);
    e.anchor = std::move(anchor);
    e.params.params = std::move(params);
    e.params.constraint = std::move(constraint);
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    return e;
}

}  // namespace fibharm::catalog
