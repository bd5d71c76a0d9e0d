#include "fibharm/transforms.hpp"

#include <string>
#include <utility>

#include "fibharm/harmonic.hpp"

namespace fibharm {

namespace {

std::string point(std::int64_t n) { return "n=" + std::to_string(n); }

Rational signed_choose(std::int64_t n, std::int64_t k, bool negative) {
    BigInt c = choose(n, k);
    if (negative) c = -c;
    return Rational(c);
}

}  // namespace

FiniteSequence::FiniteSequence(std::int64_t start, std::vector<LogValue> values)
    : start_(start), values_(std::move(values)) {
    if (values_.empty()) throw DomainError("FiniteSequence must have at least one value");
}

const LogValue& FiniteSequence::operator[](std::int64_t j) const {
    if (j < start_ || j > last()) {
        throw DomainError("sequence index " + std::to_string(j) + " outside [" + std::to_string(start_) + ", " +
                          std::to_string(last()) + "]");
    }
    return values_[static_cast<std::size_t>(j - start_)];
}

CheckReport abel_check(const FiniteSequence& a, const FiniteSequence& b, std::int64_t n, AbelVariant variant) {
    if (n < 0 || !a.covers(1, n + 1) || !b.covers(1, n + 1)) {
        throw DomainError("abel_check needs both sequences on [1, " + std::to_string(n + 1) + "]");
    }
    const bool diff = variant == AbelVariant::Difference;
    LogValue lhs, rhs;
    for (std::int64_t k = 1; k <= n; ++k) {
        lhs += b[k] * (diff ? a[k + 1] - a[k] : a[k + 1] + a[k]);
        rhs += a[k + 1] * (diff ? b[k] - b[k + 1] : b[k] + b[k + 1]);
    }
    const LogValue boundary = a[n + 1] * b[n + 1] - a[1] * b[1];
    if (diff) rhs += boundary;
    else rhs -= boundary;
    return CheckReport::compare(diff ? "abel1" : "abel2", point(n), lhs, rhs);
}

FiniteSequence binomial_transform(const FiniteSequence& s) {
    if (s.start() != 0) throw DomainError("binomial_transform needs a sequence starting at index 0");
    std::vector<LogValue> out;
    out.reserve(s.size());
    for (std::int64_t n = 0; n <= s.last(); ++n) {
        LogValue acc;
        for (std::int64_t k = 0; k <= n; ++k) acc += s[k] * LogValue(signed_choose(n, k, k % 2 == 1));
        out.push_back(std::move(acc));
    }
    return {0, std::move(out)};
}

void require_transform_pair(const FiniteSequence& s, const FiniteSequence& sigma, std::int64_t n) {
    if (!s.covers(0, n) || !sigma.covers(0, n)) {
        throw PairMismatch("transform pair must be defined on [0, " + std::to_string(n) + "]");
    }
    for (std::int64_t j = 0; j <= n; ++j) {
        LogValue acc;
        for (std::int64_t k = 0; k <= j; ++k) acc += s[k] * LogValue(signed_choose(j, k, k % 2 == 1));
        if (acc != sigma[j]) {
            throw PairMismatch("sigma_" + std::to_string(j) + " = " + sigma[j].to_string() +
                               " but the transform gives " + acc.to_string());
        }
    }
}

CheckReport boyad1_check(const FiniteSequence& s, const FiniteSequence& sigma, std::int64_t n) {
    require_transform_pair(s, sigma, n);
    LogValue lhs;
    for (std::int64_t k = 0; k <= n; ++k) {
        lhs += s[k] * LogValue(signed_choose(n, k, k % 2 == 1) * harmonic_number(k));
    }
    LogValue rhs = sigma[n] * LogValue(harmonic_number(n));
    for (std::int64_t k = 0; k < n; ++k) rhs -= sigma[k] * LogValue(Rational(1, n - k));
    return CheckReport::compare("boyad1", point(n), lhs, rhs);
}

CheckReport boyad2_check(const FiniteSequence& s, const FiniteSequence& sigma, const GibonacciSeed& seed,
                         std::int64_t n) {
    require_transform_pair(s, sigma, n);
    LogValue lhs, rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
        lhs += s[k] * LogValue(signed_choose(n, k, k % 2 == 0) * Rational(gib(seed, k)));
        rhs += sigma[k] * LogValue(signed_choose(n, k, k % 2 == 1) * Rational(gib(seed, n - 2 * k)));
    }
    return CheckReport::compare("boyad2", point(n) + ",seed=" + seed.to_string(), lhs, rhs);
}

CheckReport gouldqu_check(const FiniteSequence& t, const FiniteSequence& tau, std::int64_t n, HalfInt m, HalfInt r) {
    require_transform_pair(t, tau, n);
    const std::string where = point(n) + ",m=" + m.to_string() + ",r=" + r.to_string();
    if ((m.is_integer() && m.to_integer() < 0) || (r.is_integer() && r.to_integer() < 0)) {
        throw DomainError("gouldqu_check: m and r must not be negative integers (" + where + ")");
    }
    const Rational mr = m.to_rational(), rr = r.to_rational();
    LogValue lhs, rhs;
    for (std::int64_t k = 0; k <= n; ++k) {
        const Rational upper = rr + mr + Rational(n - k + 1);
        const Rational bl = binom_general(upper, mr + 1);
        const Rational br = binom_general(upper, rr + 1);
        if (bl.is_zero() || br.is_zero()) {
            return CheckReport::skipped("gouldqu", where, "zero binomial at k=" + std::to_string(k));
        }
        lhs += t[k] * LogValue(signed_choose(n, k, k % 2 == 1) / bl);
        rhs += tau[k] * LogValue(signed_choose(n, k, (n - k) % 2 == 1) / br);
    }
    rhs *= (mr + 1) / (rr + 1);
    return CheckReport::compare("gouldqu", where, lhs, rhs);
}

FiniteSequence random_rational_sequence(std::mt19937_64& rng, std::int64_t start, std::size_t length) {
    std::uniform_int_distribution<long> d(-9, 9);
    std::vector<LogValue> v;
    v.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        long q = 0;
        while (q == 0) q = d(rng);
        v.emplace_back(Rational(d(rng), q));
    }
    return {start, std::move(v)};
}

}  // namespace fibharm
