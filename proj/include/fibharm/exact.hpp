#pragma once

// Exact arithmetic: big integers, normalized rationals, the ring Q[ln2]
// restricted to degree one, and integer/half-integer indices.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "fibharm/errors.hpp"

namespace fibharm {

using BigInt = mpz_class;

/// Signed rational p/q with gcd(|p|, q) = 1 and q >= 1 after every operation.
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.q_ = std::move(q);
        r.q_.canonicalize();
        return r;
    }

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Multiplicative inverse; DivisionByZero for 0.
    Rational inv() const;

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Integer power; negative exponents invert (DivisionByZero for 0^-k).
    Rational pow(long e) const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;
    static Rational parse(std::string_view text);

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational rational_add(const Rational& x, const Rational& y);
Rational rational_mul(const Rational& x, const Rational& y);
Rational rational_neg(const Rational& x);
Rational rational_inv(const Rational& x);

/// Element rat + log2 * ln2 of Q[ln2]. Equality is coefficient-wise.
struct LogValue {
    Rational rat;
    Rational log2;

    LogValue() = default;
    LogValue(const Rational& r) : rat(r) {}  // NOLINT(google-explicit-constructor)
    LogValue(long v) : rat(v) {}  // NOLINT(google-explicit-constructor)
    LogValue(int v) : rat(v) {}  // NOLINT(google-explicit-constructor)
    LogValue(Rational r, Rational l) : rat(std::move(r)), log2(std::move(l)) {}

    static LogValue ln2() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return rat.is_zero() && log2.is_zero(); }
    bool is_rational() const { return log2.is_zero(); }

    LogValue& operator+=(const LogValue& o) { rat += o.rat; log2 += o.log2; return *this; }
    LogValue& operator-=(const LogValue& o) { rat -= o.rat; log2 -= o.log2; return *this; }
    LogValue& operator*=(const Rational& c) { rat *= c; log2 *= c; return *this; }
    /// Product; DegreeOverflow when both operands carry ln2.
    LogValue& operator*=(const LogValue& o);
    /// Division by a rational-only value; DegreeOverflow if the divisor has ln2.
    LogValue& operator/=(const LogValue& o);

    friend LogValue operator+(LogValue a, const LogValue& b) { return a += b; }
    friend LogValue operator-(LogValue a, const LogValue& b) { return a -= b; }
    friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
    friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
    friend LogValue operator-(const LogValue& a) { return {-a.rat, -a.log2}; }

    friend bool operator==(const LogValue& a, const LogValue& b) {
        return a.rat == b.rat && a.log2 == b.log2;
    }
    friend bool operator!=(const LogValue& a, const LogValue& b) { return !(a == b); }

    /// "p/q + (a/b)*ln2", dropping a zero term; "0" for zero.
    std::string to_string() const;
    static LogValue parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const LogValue& v);

LogValue logvalue_add(const LogValue& x, const LogValue& y);
LogValue logvalue_scale(const Rational& c, const LogValue& x);
LogValue logvalue_mul(const LogValue& x, const LogValue& y);

/// Member of Z/2 (integers and half-integers), stored doubled.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(long v) : twice_(2 * static_cast<std::int64_t>(v)) {}  // NOLINT
    static constexpr HalfInt from_twice(std::int64_t twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    /// DomainError unless the rational lies in Z/2.
    static HalfInt from_rational(const Rational& r);

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    /// Integer value; DomainError for a half-integer.
    std::int64_t to_integer() const;
    Rational to_rational() const { return {static_cast<long>(twice_), 2L}; }

    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    /// "k" or "k/2".
    std::string to_string() const;
    static HalfInt parse(std::string_view text);

private:
    std::int64_t twice_ = 0;
};

std::ostream& operator<<(std::ostream& os, HalfInt h);

constexpr HalfInt half(std::int64_t twice) { return HalfInt::from_twice(twice); }

enum class HalfIntClass { NonNegInteger, NegInteger, PositiveHalf, NegativeHalf, Zero };

/// Zero is reported as Zero, not NonNegInteger.
HalfIntClass halfint_classify(HalfInt z);
std::string_view to_string(HalfIntClass c);

}  // namespace fibharm
