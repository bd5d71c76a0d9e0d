#pragma once

// Harmonic and odd harmonic numbers at integer and half-integer arguments,
// generalized binomial coefficients, and the relation suites that pin the
// half-integer reductions down exactly.

#include <cstdint>
#include <vector>

#include "fibharm/check_report.hpp"
#include "fibharm/exact.hpp"

namespace fibharm {

/// H_z for z in Z/2 outside the negative integers (HarmonicPole there).
/// H_{m-1/2} = 2 O_m - 2 ln2 for m >= 0; lower half-integers follow
/// H_{z-1} = H_z - 1/z.
LogValue harmonic(HalfInt z);

/// O_n = sum_{j=1}^n 1/(2j-1); DomainError for n < 0.
Rational odd_harmonic(std::int64_t n);

/// Integer-argument shortcut for harmonic(); DomainError for n < 0.
Rational harmonic_number(std::int64_t n);

Rational harmonic_general(std::int64_t n, std::int64_t m);
Rational odd_harmonic_general(std::int64_t n, std::int64_t m);

/// C(n, k) for 0 <= k <= n (0 when k > n); DomainError on negative input.
BigInt choose(std::int64_t n, std::int64_t k);

/// Falling-factorial binomial prod_{i<lower}(upper - i) / lower!.
Rational binom(const Rational& upper, std::int64_t lower);
Rational binom(HalfInt upper, std::int64_t lower);

/// C(upper, lower) with a half-integer lower argument, restricted to the
/// family where upper - lower is a non-negative integer d. Uses
/// C(p - 1/2, d) = C(2p,p) C(p,d) / (C(2(p-d), p-d) 4^d) for p >= d and the
/// falling factorial of C(upper, d) otherwise. UnsupportedBinomial outside.
Rational binom_halfint_lower(HalfInt upper, HalfInt lower);

/// Binomial with rational arguments as used by the identity catalog:
/// integer lower >= 0 by falling factorial, otherwise through the symmetric
/// form when upper - lower is a non-negative integer, 0 for a negative
/// integer lower, UnsupportedBinomial for anything else.
Rational binom_general(const Rational& upper, const Rational& lower);

/// The eight relations between half-integer harmonic numbers and O_n, for
/// n in [0, n_max]. One report per (relation, n).
std::vector<CheckReport> lemma2_suite(std::int64_t n_max);

/// The four closed forms for C(r +- 1/2, s), C(1/2, r), C(-1/2, r) against the
/// falling factorial, for r, s in [0, rs_max]. Points where a closed form has
/// a zero denominator (or C(r, s) = 0 on the right) are reported Skipped.
std::vector<CheckReport> lemma3_suite(std::int64_t rs_max);

/// The half-integer reductions used at m = -3/2 of the Gould-Quaintance
/// family, for r in [0, r_max], n in [0, n_max], k in [0, n].
std::vector<CheckReport> halfint_reduction_suite(std::int64_t r_max, std::int64_t n_max);

}  // namespace fibharm
