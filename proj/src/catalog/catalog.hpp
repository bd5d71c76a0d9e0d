#pragma once

// Shared vocabulary for the catalog sources: exact helpers that turn poles
// and vanishing denominators into the exceptions evaluate() reports as skips,
// plus sampler and constraint builders.

#include <initializer_list>
#include <string>
#include <vector>

#include "fibharm/harmonic.hpp"
#include "fibharm/registry.hpp"
#include "fibharm/sequences.hpp"

namespace fibharm::catalog {

using Int = std::int64_t;

inline Rational F(Int j) { return Rational(fib(j)); }
inline Rational L(Int j) { return Rational(lucas(j)); }
inline Rational G(const GibonacciSeed& seed, Int j) { return Rational(gib(seed, j)); }

/// (-1)^e for any integer e.
inline Rational sgn(Int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

inline LogValue H(HalfInt z) { return harmonic(z); }
inline LogValue H(Int n) { return harmonic(HalfInt(n)); }
inline LogValue H(const Rational& z) { return harmonic(HalfInt::from_rational(z)); }
/// Rational H_n for integer n >= 0.
inline Rational Hq(Int n) {
    if (n < 0) throw HarmonicPole("harmonic number at negative integer " + std::to_string(n));
    return harmonic_number(n);
}

inline Rational O(Int n) {
    if (n < 0) throw HarmonicPole("odd harmonic number at negative index " + std::to_string(n));
    return odd_harmonic(n);
}

inline Rational C(const Rational& upper, const Rational& lower) { return binom_general(upper, lower); }
inline Rational C(Int upper, Int lower) { return lower < 0 || upper < 0 ? binom_general(upper, lower) : Rational(choose(upper, lower)); }

/// Reciprocal with the offending quantity named in the skip reason.
inline Rational inv(const Rational& x, const std::string& what) {
    if (x.is_zero()) throw DivisionByZero(what + " = 0");
    return x.inv();
}

inline Rational Cinv(const Rational& upper, const Rational& lower) {
    const Rational c = C(upper, lower);
    if (c.is_zero()) throw DivisionByZero("binomial C(" + upper.to_string() + ", " + lower.to_string() + ") = 0");
    return c.inv();
}

inline Rational pw(const Rational& base, Int e) { return base.pow(static_cast<long>(e)); }

inline Rational R(Int v) { return Rational(static_cast<long>(v)); }

template <class Fn>
LogValue sum(Int lo, Int hi, Fn f) {
    LogValue acc;
    for (Int k = lo; k <= hi; ++k) acc += LogValue(f(k));
    return acc;
}

// --- samplers -------------------------------------------------------------

Sampler int_range(Int lo, Int hi);
/// n in [lo, ctx.n_max].
Sampler n_range(Int lo);
Sampler fixed(std::vector<ParamValue> values);
Sampler halves(std::initializer_list<Int> twice_values);
Sampler rationals(std::initializer_list<std::pair<long, long>> values);
/// The five default gibonacci seeds.
Sampler default_seeds();

ParamSpec p_int(std::string name, std::string domain, Sampler s);
ParamSpec p_half(std::string name, std::string domain, Sampler s);
ParamSpec p_rat(std::string name, std::string domain, Sampler s);
ParamSpec p_seed();

using Constraint = std::function<std::optional<std::string>(const Assignment&)>;

/// All constraints must hold; the first violation is reported.
Constraint all_of(std::vector<Constraint> cs);
Constraint at_least(std::string name, Int lo);
Constraint odd(std::string name);
Constraint even(std::string name);
/// HalfInt parameter that is not a negative integer.
Constraint not_negative_integer(std::string name);

IdentityEntry make(std::string id, std::string family, std::string anchor, std::vector<ParamSpec> params,
                   Constraint constraint, Evaluator lhs, Evaluator rhs);

std::vector<IdentityEntry> abel_fib_entries();
std::vector<IdentityEntry> abel_comb_entries();
std::vector<IdentityEntry> gould_entries();
std::vector<IdentityEntry> boyad_entries();
std::vector<IdentityEntry> gq_entries();

}  // namespace fibharm::catalog
