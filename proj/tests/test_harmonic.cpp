#include <algorithm>

#include <gtest/gtest.h>

#include "fibharm/harmonic.hpp"

using namespace fibharm;

namespace {

std::size_t count(const std::vector<CheckReport>& v, Outcome o) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [o](const auto& r) { return r.outcome == o; }));
}

std::vector<CheckReport> only(const std::vector<CheckReport>& v, const std::string& id) {
    std::vector<CheckReport> out;
    std::copy_if(v.begin(), v.end(), std::back_inserter(out), [&](const auto& r) { return r.id == id; });
    return out;
}

}  // namespace

TEST(Harmonic, IntegerValues) {
    EXPECT_EQ(harmonic(HalfInt(0)), LogValue(0));
    EXPECT_EQ(harmonic(HalfInt(3)), LogValue(Rational(11, 6)));
    EXPECT_EQ(harmonic_number(4), Rational(25, 12));
    EXPECT_EQ(odd_harmonic(0), Rational(0));
    EXPECT_EQ(odd_harmonic(3), Rational(23, 15));
    EXPECT_THROW(harmonic(HalfInt(-1)), HarmonicPole);
    EXPECT_THROW(harmonic(HalfInt(-4)), HarmonicPole);
    EXPECT_THROW(odd_harmonic(-1), DomainError);
}

TEST(Harmonic, HalfIntegerValues) {
    EXPECT_EQ(harmonic(half(-1)), LogValue(Rational(0), Rational(-2)));
    EXPECT_EQ(harmonic(half(1)), LogValue(Rational(2), Rational(-2)));
    EXPECT_EQ(harmonic(half(-3)), LogValue(Rational(2), Rational(-2)));
    EXPECT_EQ(harmonic(half(3)), LogValue(Rational(8, 3), Rational(-2)));
    EXPECT_EQ(harmonic(half(-5)), LogValue(Rational(2) + Rational(2, 3), Rational(-2)));
}

TEST(Harmonic, RecurrenceAcrossZ2) {
    // H_z - H_{z-1} = 1/z wherever both sides are defined
    for (std::int64_t t = -41; t <= 81; ++t) {
        const HalfInt z = half(t);
        const HalfInt zm = z - HalfInt(1);
        if (z.is_integer() && (z.to_integer() <= 0)) continue;
        if (zm.is_integer() && zm.to_integer() < 0) continue;
        EXPECT_EQ(harmonic(z) - harmonic(zm), LogValue(z.to_rational().inv())) << z.to_string();
    }
}

TEST(Harmonic, GeneralOrders) {
    EXPECT_EQ(harmonic_general(3, 1), harmonic_number(3));
    EXPECT_EQ(harmonic_general(3, 2), Rational(49, 36));
    EXPECT_EQ(odd_harmonic_general(2, 2), Rational(10, 9));
    EXPECT_EQ(odd_harmonic_general(5, 1), odd_harmonic(5));
}

TEST(Binomial, IntegerChoose) {
    EXPECT_EQ(choose(5, 2), 10);
    EXPECT_EQ(choose(3, 5), 0);
    EXPECT_EQ(choose(0, 0), 1);
    EXPECT_THROW(choose(-1, 0), DomainError);
    EXPECT_EQ(choose(60, 30).get_str(), "118264581564861424");
}

TEST(Binomial, FallingFactorial) {
    EXPECT_EQ(binom(half(1), 2), Rational(-1, 8));
    EXPECT_EQ(binom(half(3), 2), Rational(3, 8));
    EXPECT_EQ(binom(half(-1), 3), Rational(-5, 16));
    EXPECT_EQ(binom(Rational(-3), 2), Rational(6));
    EXPECT_EQ(binom(Rational(-1), 5), Rational(-1));
    EXPECT_EQ(binom(Rational(4), 6), Rational(0));
    EXPECT_EQ(binom(Rational(1, 3), 0), Rational(1));
    EXPECT_EQ(binom(Rational(-2, 3), 2), Rational(5, 9));
    EXPECT_THROW(binom(Rational(2), -1), DomainError);
}

TEST(Binomial, NegativeUpperMatchesFallingFactorial) {
    for (long u = -12; u <= 12; ++u) {
        for (long k = 0; k <= 12; ++k) {
            mpq_class num(1);
            for (long i = 0; i < k; ++i) num *= u - i;
            mpz_class fact;
            mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(k));
            EXPECT_EQ(binom(Rational(u), k), Rational::from_mpq(num / fact)) << u << " " << k;
        }
    }
}

TEST(Binomial, HalfIntegerLower) {
    EXPECT_EQ(binom_halfint_lower(half(3), half(-1)), binom(half(3), 2));
    EXPECT_EQ(binom_halfint_lower(half(5), half(1)), binom(half(5), 2));
    EXPECT_EQ(binom_halfint_lower(half(-1), half(-3)), Rational(-1, 2));
    EXPECT_EQ(binom_halfint_lower(half(-3), half(-5)), binom(half(-3), 1));
    EXPECT_THROW(binom_halfint_lower(HalfInt(2), half(1)), UnsupportedBinomial);
    EXPECT_THROW(binom_halfint_lower(half(1), half(3)), UnsupportedBinomial);
    // closed form against the falling factorial, p >= d
    for (std::int64_t p = 0; p <= 20; ++p) {
        for (std::int64_t d = 0; d <= p; ++d) {
            const HalfInt up = half(2 * p - 1);
            EXPECT_EQ(binom_halfint_lower(up, up - HalfInt(d)), binom(up, d)) << p << " " << d;
        }
    }
}

TEST(Binomial, General) {
    EXPECT_EQ(binom_general(Rational(7, 2), Rational(3, 2)), binom(half(7), 2));
    EXPECT_EQ(binom_general(Rational(3), Rational(-1)), Rational(0));
    EXPECT_THROW(binom_general(Rational(1, 3), Rational(1, 2)), UnsupportedBinomial);
}

TEST(Suites, Lemma2HoldsExactly) {
    const auto v = lemma2_suite(200);
    EXPECT_EQ(v.size(), 8u * 201u);
    EXPECT_EQ(count(v, Outcome::Equal), v.size());
}

TEST(Suites, Lemma3ClosedForms) {
    const auto v = lemma3_suite(25);
    const auto q = only(v, "lemma3:qdgxupm");
    EXPECT_EQ(count(q, Outcome::Unequal), 0u);
    EXPECT_EQ(count(q, Outcome::Equal), 26u * 27u / 2u);
    EXPECT_EQ(count(only(v, "lemma3:1/2"), Outcome::Equal), 26u);
    EXPECT_EQ(count(only(v, "lemma3:-1/2"), Outcome::Equal), 26u);
    // the C(r + 1/2, s) closed form as displayed disagrees with the falling
    // factorial at every non-degenerate point
    const auto first = only(v, "lemma3:r+1/2");
    EXPECT_EQ(count(first, Outcome::Equal), 0u);
    EXPECT_EQ(count(first, Outcome::Unequal), 325u);
}

TEST(Suites, HalfIntegerReductions) {
    const auto v = halfint_reduction_suite(10, 15);
    EXPECT_EQ(count(only(v, "halfint:mn5v94x"), Outcome::Unequal), 0u);
    EXPECT_EQ(count(only(v, "halfint:mdxkxi4"), Outcome::Unequal), 0u);
    EXPECT_EQ(count(only(v, "halfint:zj8qis2"), Outcome::Unequal), 0u);
    // kgwmxux holds only on the diagonal k = n - 1; kgwmxuxuu nowhere
    for (const auto& r : only(v, "halfint:kgwmxux")) {
        const bool diagonal = r.assignment.find(",n=") != std::string::npos &&
                              [&] {
                                  long rr, n, k;
                                  std::sscanf(r.assignment.c_str(), "r=%ld,n=%ld,k=%ld", &rr, &n, &k);
                                  return k == n - 1;
                              }();
        EXPECT_EQ(r.outcome == Outcome::Equal, diagonal) << r.assignment;
    }
    const auto uu = only(v, "halfint:kgwmxuxuu");
    ASSERT_EQ(uu.size(), 11u);
    EXPECT_EQ(count(uu, Outcome::Equal), 0u);
    EXPECT_EQ(uu[0].lhs->to_string(), "-2");
}
