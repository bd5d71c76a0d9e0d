#include "fibharm/exact.hpp"

#include <cctype>

namespace fibharm {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

BigInt parse_bigint(std::string_view text) {
    text = trim(text);
    std::string digits(text);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const std::size_t first = (!digits.empty() && digits.front() == '-') ? 1 : 0;
    if (digits.size() == first) throw ParseError("empty integer in '" + std::string(text) + "'");
    for (std::size_t i = first; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
            throw ParseError("not an integer: '" + std::string(text) + "'");
        }
    }
    return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    return from_mpq(1 / q_);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string Rational::to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational rational_add(const Rational& x, const Rational& y) { return x + y; }
Rational rational_mul(const Rational& x, const Rational& y) { return x * y; }
Rational rational_neg(const Rational& x) { return -x; }
Rational rational_inv(const Rational& x) { return x.inv(); }

LogValue& LogValue::operator*=(const LogValue& o) {
    if (!log2.is_zero() && !o.log2.is_zero()) {
        throw DegreeOverflow("product of two ln2-bearing values");
    }
    Rational l = rat * o.log2 + log2 * o.rat;
    rat *= o.rat;
    log2 = std::move(l);
    return *this;
}

LogValue& LogValue::operator/=(const LogValue& o) {
    if (!o.log2.is_zero()) throw DegreeOverflow("division by an ln2-bearing value");
    const Rational r = o.rat.inv();
    rat *= r;
    log2 *= r;
    return *this;
}

std::string LogValue::to_string() const {
    if (log2.is_zero()) return rat.to_string();
    std::string l = "(" + log2.to_string() + ")*ln2";
    if (rat.is_zero()) return l;
    return rat.to_string() + " + " + l;
}

LogValue LogValue::parse(std::string_view text) {
    text = trim(text);
    constexpr std::string_view suffix = ")*ln2";
    if (text.size() < suffix.size() || text.substr(text.size() - suffix.size()) != suffix) {
        return LogValue(Rational::parse(text));
    }
    const auto open = text.rfind('(');
    if (open == std::string_view::npos) throw ParseError("malformed ln2 term: '" + std::string(text) + "'");
    Rational l = Rational::parse(text.substr(open + 1, text.size() - suffix.size() - open - 1));
    std::string_view head = trim(text.substr(0, open));
    if (head.empty()) return {Rational(0), l};
    if (head.back() != '+') throw ParseError("expected '+' before ln2 term: '" + std::string(text) + "'");
    head.remove_suffix(1);
    return {Rational::parse(head), l};
}

std::ostream& operator<<(std::ostream& os, const LogValue& v) { return os << v.to_string(); }

LogValue logvalue_add(const LogValue& x, const LogValue& y) { return x + y; }
LogValue logvalue_scale(const Rational& c, const LogValue& x) {
    LogValue r = x;
    r *= c;
    return r;
}
LogValue logvalue_mul(const LogValue& x, const LogValue& y) { return x * y; }

HalfInt HalfInt::from_rational(const Rational& r) {
    const Rational d = r * Rational(2);
    if (!d.is_integer() || !d.num().fits_slong_p()) {
        throw DomainError("not an integer or half-integer: " + r.to_string());
    }
    return from_twice(d.num().get_si());
}

std::int64_t HalfInt::to_integer() const {
    if (!is_integer()) throw DomainError("expected an integer, got " + to_string());
    return twice_ / 2;
}

std::string HalfInt::to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view text) { return from_rational(Rational::parse(text)); }

std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

HalfIntClass halfint_classify(HalfInt z) {
    if (z.twice() == 0) return HalfIntClass::Zero;
    if (z.is_integer()) return z.twice() > 0 ? HalfIntClass::NonNegInteger : HalfIntClass::NegInteger;
    return z.twice() > 0 ? HalfIntClass::PositiveHalf : HalfIntClass::NegativeHalf;
}

std::string_view to_string(HalfIntClass c) {
    switch (c) {
        case HalfIntClass::NonNegInteger: return "NonNegInteger";
        case HalfIntClass::NegInteger: return "NegInteger";
        case HalfIntClass::PositiveHalf: return "PositiveHalf";
        case HalfIntClass::NegativeHalf: return "NegativeHalf";
        case HalfIntClass::Zero: return "Zero";
    }
    return "?";
}

}  // namespace fibharm
