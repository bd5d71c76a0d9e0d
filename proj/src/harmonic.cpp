#include "fibharm/harmonic.hpp"

#include <string>

namespace fibharm {

namespace {

struct HarmonicTables {
    std::vector<Rational> h{Rational(0)};  // h[n] = H_n
    std::vector<Rational> o{Rational(0)};  // o[n] = O_n
    std::vector<LogValue> neg_half;         // neg_half[i] = H_{-1/2 - i}
};

HarmonicTables& tables() {
    thread_local HarmonicTables t;
    return t;
}

const Rational& h_at(std::int64_t n) {
    auto& h = tables().h;
    while (static_cast<std::int64_t>(h.size()) <= n) {
        const auto j = static_cast<long>(h.size());
        h.push_back(h.back() + Rational(1, j));
    }
    return h[static_cast<std::size_t>(n)];
}

const Rational& o_at(std::int64_t n) {
    auto& o = tables().o;
    while (static_cast<std::int64_t>(o.size()) <= n) {
        const auto j = static_cast<long>(o.size());
        o.push_back(o.back() + Rational(1, 2 * j - 1));
    }
    return o[static_cast<std::size_t>(n)];
}

const LogValue& negative_half(std::int64_t i) {
    auto& t = tables().neg_half;
    if (t.empty()) t.push_back(LogValue(Rational(0), Rational(-2)));
    while (static_cast<std::int64_t>(t.size()) <= i) {
        // H_{z-1} = H_z - 1/z with z = -1/2 - (size - 1)
        const auto z = half(-1 - 2 * (static_cast<std::int64_t>(t.size()) - 1));
        t.push_back(t.back() - LogValue(z.to_rational().inv()));
    }
    return t[static_cast<std::size_t>(i)];
}

}  // namespace

LogValue harmonic(HalfInt z) {
    if (z.is_integer()) {
        const std::int64_t n = z.to_integer();
        if (n < 0) throw HarmonicPole("harmonic number at negative integer " + z.to_string());
        return LogValue(h_at(n));
    }
    // z = m - 1/2
    const std::int64_t m = (z.twice() + 1) / 2;
    if (m >= 0) return LogValue(Rational(2) * o_at(m), Rational(-2));
    return negative_half(-m);
}

Rational harmonic_number(std::int64_t n) {
    if (n < 0) throw DomainError("harmonic_number: negative argument " + std::to_string(n));
    return h_at(n);
}

Rational odd_harmonic(std::int64_t n) {
    if (n < 0) throw DomainError("odd_harmonic: negative argument " + std::to_string(n));
    return o_at(n);
}

Rational harmonic_general(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 1) throw DomainError("harmonic_general requires n >= 0 and m >= 1");
    Rational sum;
    for (long j = 1; j <= n; ++j) sum += Rational(j).pow(-m);
    return sum;
}

Rational odd_harmonic_general(std::int64_t n, std::int64_t m) {
    if (n < 0 || m < 1) throw DomainError("odd_harmonic_general requires n >= 0 and m >= 1");
    Rational sum;
    for (long j = 1; j <= n; ++j) sum += Rational(2 * j - 1).pow(-m);
    return sum;
}

BigInt choose(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0) throw DomainError("choose: negative argument");
    if (k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational binom(const Rational& upper, std::int64_t lower) {
    if (lower < 0) throw DomainError("binom: negative lower argument " + std::to_string(lower));
    if (upper.is_integer()) {
        const BigInt u = upper.num();
        if (u >= 0) {
            if (!u.fits_slong_p()) throw DomainError("binom: upper argument too large");
            return Rational(choose(u.get_si(), lower));
        }
        // C(-a, k) = (-1)^k C(a + k - 1, k)
        const long a = BigInt(-u).get_si();
        BigInt c = choose(a + lower - 1, lower);
        return Rational(lower % 2 == 0 ? c : BigInt(-c));
    }
    mpq_class num(1);
    const mpq_class& u = upper.mpq();
    for (std::int64_t i = 0; i < lower; ++i) num *= u - static_cast<long>(i);
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(lower));
    num /= fact;
    return Rational::from_mpq(num);
}

Rational binom(HalfInt upper, std::int64_t lower) { return binom(upper.to_rational(), lower); }

Rational binom_halfint_lower(HalfInt upper, HalfInt lower) {
    if (lower.is_integer()) {
        const std::int64_t k = lower.to_integer();
        if (k < 0) throw UnsupportedBinomial("binom_halfint_lower: negative integer lower argument");
        return binom(upper, k);
    }
    const HalfInt diff = upper - lower;
    if (!diff.is_integer() || diff.to_integer() < 0) {
        throw UnsupportedBinomial("C(" + upper.to_string() + ", " + lower.to_string() +
                                  ") is outside the reducible half-integer family");
    }
    const std::int64_t d = diff.to_integer();
    // upper = p - 1/2
    const std::int64_t p = (upper.twice() + 1) / 2;
    if (p >= d) {
        Rational r(choose(2 * p, p) * choose(p, d));
        BigInt den = choose(2 * (p - d), p - d);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * d));
        return r / Rational(den);
    }
    return binom(upper, d);
}

Rational binom_general(const Rational& upper, const Rational& lower) {
    if (lower.is_integer() && lower.sign() >= 0) {
        if (!lower.num().fits_slong_p()) throw DomainError("binom: lower argument too large");
        return binom(upper, lower.num().get_si());
    }
    const Rational diff = upper - lower;
    if (diff.is_integer() && diff.sign() >= 0) {
        if (!diff.num().fits_slong_p()) throw DomainError("binom: argument too large");
        return binom(upper, diff.num().get_si());
    }
    if (lower.is_integer()) return Rational(0);
    throw UnsupportedBinomial("C(" + upper.to_string() + ", " + lower.to_string() +
                              ") needs a Gamma-function binomial");
}

namespace {

CheckReport relation(std::string id, std::string assignment, const LogValue& lhs, const LogValue& rhs) {
    return CheckReport::compare(std::move(id), std::move(assignment), lhs, rhs);
}

Rational pow4(std::int64_t e) { return Rational(4).pow(static_cast<long>(e)); }

}  // namespace

std::vector<CheckReport> lemma2_suite(std::int64_t n_max) {
    if (n_max < 0) throw DomainError("lemma2_suite: n_max must be >= 0");
    std::vector<CheckReport> out;
    out.reserve(static_cast<std::size_t>(8 * (n_max + 1)));
    const LogValue h_m1 = harmonic(half(-1));
    const LogValue h_p1 = harmonic(half(1));
    const LogValue h_m3 = harmonic(half(-3));
    for (std::int64_t n = 0; n <= n_max; ++n) {
        const std::string a = "n=" + std::to_string(n);
        const LogValue lo = harmonic(half(2 * n - 1));
        const LogValue hi = harmonic(half(2 * n + 1));
        const Rational o_n = odd_harmonic(n);
        const Rational o_n1 = odd_harmonic(n + 1);
        out.push_back(relation("lemma2:zts4fm1", a, lo, LogValue(Rational(2) * o_n, Rational(-2))));
        out.push_back(relation("lemma2:plh634k", a, lo - h_m1, Rational(2) * o_n));
        out.push_back(relation("lemma2:hgplrbd", a, lo - h_p1, Rational(2) * (o_n - 1)));
        out.push_back(relation("lemma2:ivi1ex5", a, hi - h_m1, Rational(2) * o_n1));
        out.push_back(relation("lemma2:u6ng5d6", a, hi - h_p1, Rational(2) * (o_n1 - 1)));
        out.push_back(relation("lemma2:half-step", a, hi - lo, Rational(2, 2 * n + 1)));
        out.push_back(relation("lemma2:pobmr6h", a, lo - h_m3, Rational(2) * (o_n - 1)));
        out.push_back(relation("lemma2:pobmr6h-shift", a, hi - h_m3, Rational(2) * (o_n1 - 1)));
    }
    return out;
}

std::vector<CheckReport> lemma3_suite(std::int64_t rs_max) {
    if (rs_max < 0) throw DomainError("lemma3_suite: bound must be >= 0");
    std::vector<CheckReport> out;
    for (std::int64_t r = 0; r <= rs_max; ++r) {
        const std::string ar = "r=" + std::to_string(r);
        const Rational c2r(choose(2 * r, r));
        for (std::int64_t s = 0; s <= rs_max; ++s) {
            const std::string a = ar + ",s=" + std::to_string(s);
            // C(r + 1/2, s) = ((2r+1)/(2s)) C(2s,s) / (C(r,s) 2^{2s})
            const BigInt crs = choose(r, s);
            if (s == 0 || crs == 0) {
                out.push_back(CheckReport::skipped("lemma3:r+1/2", a, s == 0 ? "2s = 0" : "C(r,s) = 0"));
            } else {
                const Rational closed = Rational(2 * r + 1, 2 * s) * Rational(choose(2 * s, s)) /
                                        (Rational(crs) * pow4(s));
                out.push_back(relation("lemma3:r+1/2", a, binom(half(2 * r + 1), s), closed));
            }
            // C(r - 1/2, s) = C(2r,r) C(r,s) / (C(2(r-s), r-s) 2^{2s})
            if (s > r) {
                out.push_back(CheckReport::skipped("lemma3:qdgxupm", a, "C(2(r-s), r-s) undefined for s > r"));
            } else {
                const Rational closed = c2r * Rational(crs) /
                                        (Rational(choose(2 * (r - s), r - s)) * pow4(s));
                out.push_back(relation("lemma3:qdgxupm", a, binom(half(2 * r - 1), s), closed));
            }
        }
        // C(1/2, r) = (-1)^{r+1} C(2r,r) / (2^{2r} (2r-1))
        const Rational sign_r = r % 2 == 0 ? Rational(1) : Rational(-1);
        out.push_back(relation("lemma3:1/2", ar, binom(half(1), r),
                               -sign_r * c2r / (pow4(r) * Rational(2 * r - 1))));
        // C(-1/2, r) = (-1)^r C(2r,r) 2^{-2r}
        out.push_back(relation("lemma3:-1/2", ar, binom(half(-1), r), sign_r * c2r / pow4(r)));
    }
    return out;
}

std::vector<CheckReport> halfint_reduction_suite(std::int64_t r_max, std::int64_t n_max) {
    if (r_max < 0 || n_max < 0) throw DomainError("halfint_reduction_suite: bounds must be >= 0");
    std::vector<CheckReport> out;
    for (std::int64_t r = 0; r <= r_max; ++r) {
        const std::string ar = "r=" + std::to_string(r);
        for (std::int64_t n = 0; n <= n_max; ++n) {
            for (std::int64_t k = 0; k <= n; ++k) {
                const std::string a = ar + ",n=" + std::to_string(n) + ",k=" + std::to_string(k);
                const std::int64_t p = r + n - k;
                // C(p - 1/2, -1/2)^{-1} = C(p - 1/2, p)^{-1} = C(2p,p)^{-1} 2^{2p}
                out.push_back(relation("halfint:mn5v94x", a, binom(half(2 * p - 1), p).inv(),
                                       pow4(p) / Rational(choose(2 * p, p))));
                // H_{-1/2} - H_{-1/2+p} = -2 O_p
                out.push_back(relation("halfint:mdxkxi4", a, harmonic(half(-1)) - harmonic(half(2 * p - 1)),
                                       Rational(-2) * odd_harmonic(p)));
                if (k < n) {
                    const std::int64_t q = n - k - 1;
                    // H_{-3/2+n-k} - H_{-1/2+p} = 2 (O_{n-k-1} - O_p)
                    out.push_back(relation("halfint:zj8qis2", a,
                                           harmonic(half(2 * (n - k) - 3)) - harmonic(half(2 * p - 1)),
                                           Rational(2) * (odd_harmonic(q) - odd_harmonic(p))));
                    // C(p - 1/2, r+1)^{-1} = C(2p, r+1)^{-1} C(p, r+1)^{-1} C(2q, q) 2^{2(r+1)}
                    out.push_back(relation("halfint:kgwmxux", a, binom(half(2 * p - 1), r + 1).inv(),
                                           Rational(choose(2 * q, q)) * pow4(r + 1) /
                                               (Rational(choose(2 * p, r + 1)) * Rational(choose(p, r + 1)))));
                }
            }
        }
        // C(r - 1/2, r+1)^{-1} = -2^{-2(r+1)} C(2r, r) / (r+1)
        out.push_back(relation("halfint:kgwmxuxuu", ar, binom(half(2 * r - 1), r + 1).inv(),
                               -Rational(choose(2 * r, r)) / (pow4(r + 1) * Rational(r + 1))));
    }
    return out;
}

}  // namespace fibharm
