#include <random>

#include <gtest/gtest.h>

#include "fibharm/harmonic.hpp"
#include "fibharm/transforms.hpp"

using namespace fibharm;

namespace {

FiniteSequence from(std::int64_t start, std::int64_t count, const auto& f) {
    std::vector<LogValue> v;
    for (std::int64_t j = start; j < start + count; ++j) v.emplace_back(f(j));
    return {start, std::move(v)};
}

}  // namespace

TEST(FiniteSequence, Bounds) {
    EXPECT_THROW(FiniteSequence(0, {}), DomainError);
    const FiniteSequence s(2, {LogValue(1), LogValue(2)});
    EXPECT_EQ(s[3], LogValue(2));
    EXPECT_THROW(s[1], DomainError);
    EXPECT_THROW(s[4], DomainError);
}

TEST(Abel, ConstantSequences) {
    const auto one = from(1, 4, [](auto) { return Rational(1); });
    const auto r = abel_check(one, one, 3, AbelVariant::Difference);
    EXPECT_EQ(r.outcome, Outcome::Equal);
    EXPECT_EQ(*r.lhs, LogValue(0));
}

TEST(Abel, FibonacciAgainstOnes) {
    const auto a = from(1, 5, [](auto k) { return Rational(fib(k)); });
    const auto b = from(1, 5, [](auto) { return Rational(1); });
    const auto r = abel_check(a, b, 4, AbelVariant::Difference);
    EXPECT_EQ(r.outcome, Outcome::Equal);
    EXPECT_EQ(*r.lhs, LogValue(4));
    EXPECT_THROW(abel_check(a, b, 5, AbelVariant::Sum), DomainError);
}

TEST(Abel, RandomSequencesBothVariants) {
    std::mt19937_64 rng(7001);
    std::uniform_int_distribution<std::int64_t> len(0, 40);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t n = len(rng);
        const auto a = random_rational_sequence(rng, 1, static_cast<std::size_t>(n + 1));
        const auto b = random_rational_sequence(rng, 1, static_cast<std::size_t>(n + 1));
        EXPECT_TRUE(abel_check(a, b, n, AbelVariant::Difference).equal());
        EXPECT_TRUE(abel_check(a, b, n, AbelVariant::Sum).equal());
    }
}

TEST(Abel, CarriesLn2Values) {
    const auto a = from(1, 6, [](auto k) { return harmonic(half(2 * k - 1)); });
    const auto b = from(1, 6, [](auto k) { return Rational(k * k); });
    EXPECT_TRUE(abel_check(a, b, 5, AbelVariant::Sum).equal());
}

TEST(BinomialTransform, ConstantOnes) {
    const auto s = from(0, 6, [](auto) { return Rational(1); });
    const auto sigma = binomial_transform(s);
    EXPECT_EQ(sigma[0], LogValue(1));
    for (int j = 1; j < 6; ++j) EXPECT_EQ(sigma[j], LogValue(0));
    EXPECT_THROW(binomial_transform(FiniteSequence(1, {LogValue(1)})), DomainError);
}

TEST(BinomialTransform, Involution) {
    std::mt19937_64 rng(7002);
    std::uniform_int_distribution<std::size_t> len(1, 26);
    for (int i = 0; i < 100; ++i) {
        const auto s = random_rational_sequence(rng, 0, len(rng));
        EXPECT_EQ(binomial_transform(binomial_transform(s)), s);
    }
}

TEST(BinomialTransform, ScaledFibonacciPair) {
    // s_k = F_k: sigma_3 = 0 - 3 + 3 - 2 = -2
    const auto s = from(0, 4, [](auto k) { return Rational(fib(k)); });
    EXPECT_EQ(binomial_transform(s)[3], LogValue(-2));
}

TEST(Boyad1, RandomPairs) {
    std::mt19937_64 rng(7003);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const auto s = random_rational_sequence(rng, 0, static_cast<std::size_t>(n + 1));
        EXPECT_TRUE(boyad1_check(s, binomial_transform(s), n).equal()) << n;
    }
}

TEST(Boyad1, RejectsNonPair) {
    const auto s = from(0, 3, [](auto k) { return Rational(k); });
    auto sigma = binomial_transform(s);
    const FiniteSequence wrong(0, {sigma[0], sigma[1] + LogValue(1), sigma[2]});
    EXPECT_THROW(boyad1_check(s, wrong, 2), PairMismatch);
    EXPECT_THROW(boyad1_check(s, sigma, 5), PairMismatch);
}

TEST(Boyad2, HoldsForFibonacciSeed) {
    std::mt19937_64 rng(7004);
    for (std::int64_t n = 0; n <= 20; ++n) {
        const auto s = random_rational_sequence(rng, 0, static_cast<std::size_t>(n + 1));
        EXPECT_TRUE(boyad2_check(s, binomial_transform(s), GibonacciSeed::fibonacci(), n).equal()) << n;
    }
}

TEST(Boyad2, FailsWhenG0IsNonzero) {
    // the lemma depends on G_0 = 0; with G = L already n = 0 gives -2 s_0 vs 2 s_0
    const FiniteSequence s(0, {LogValue(1)});
    const auto r = boyad2_check(s, binomial_transform(s), GibonacciSeed::lucas(), 0);
    EXPECT_EQ(r.outcome, Outcome::Unequal);
    EXPECT_EQ(*r.lhs, LogValue(-2));
    EXPECT_EQ(*r.rhs, LogValue(2));
}

TEST(GouldQu, RandomPairsIntegerAndHalfParameters) {
    std::mt19937_64 rng(7005);
    const HalfInt ms[] = {HalfInt(0), HalfInt(1), HalfInt(3), half(-1), half(-3), half(5)};
    const HalfInt rs[] = {HalfInt(0), HalfInt(2), HalfInt(5)};
    for (std::int64_t n = 0; n <= 10; ++n) {
        const auto t = random_rational_sequence(rng, 0, static_cast<std::size_t>(n + 1));
        const auto tau = binomial_transform(t);
        for (HalfInt m : ms) {
            for (HalfInt r : rs) {
                const auto rep = gouldqu_check(t, tau, n, m, r);
                EXPECT_EQ(rep.outcome, Outcome::Equal) << rep.assignment;
            }
        }
    }
}

TEST(GouldQu, RejectsOutsideDomain) {
    // r = -1/2 with m = -3/2 makes C(n - k - 1, -1/2) a gamma-type binomial
    const auto t = from(0, 3, [](auto k) { return Rational(k + 1); });
    EXPECT_THROW(gouldqu_check(t, binomial_transform(t), 2, half(-3), half(-1)), UnsupportedBinomial);
    EXPECT_THROW(gouldqu_check(t, binomial_transform(t), 2, HalfInt(-1), HalfInt(0)), DomainError);
}
