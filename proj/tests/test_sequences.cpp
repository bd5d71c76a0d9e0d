#include <gtest/gtest.h>

#include "fibharm/sequences.hpp"

using namespace fibharm;

TEST(Sequences, SmallFibonacciAndLucas) {
    const long f[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
    const long l[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123};
    for (int j = 0; j <= 10; ++j) {
        EXPECT_EQ(fib(j), f[j]) << j;
        EXPECT_EQ(lucas(j), l[j]) << j;
    }
}

TEST(Sequences, NegativeIndices) {
    EXPECT_EQ(fib(-1), 1);
    EXPECT_EQ(fib(-2), -1);
    EXPECT_EQ(fib(-5), 5);
    EXPECT_EQ(fib(-6), -8);
    EXPECT_EQ(lucas(-1), -1);
    EXPECT_EQ(lucas(-4), 7);
    for (int j = 1; j <= 40; ++j) {
        EXPECT_EQ(fib(-j), (j % 2 == 1 ? 1 : -1) * fib(j));
        EXPECT_EQ(lucas(-j), (j % 2 == 0 ? 1 : -1) * lucas(j));
    }
}

TEST(Sequences, LargeValue) {
    EXPECT_EQ(fib(100).get_str(), "354224848179261915075");
    EXPECT_EQ(fib(250).get_str().size(), 52u);
}

TEST(Sequences, GibonacciRecurrenceBothDirections) {
    for (const auto& seed : {GibonacciSeed(0L, 1L), GibonacciSeed(2L, 1L), GibonacciSeed(1L, 1L),
                             GibonacciSeed(3L, -1L), GibonacciSeed(-2L, 5L)}) {
        for (int j = -40; j <= 40; ++j) {
            EXPECT_EQ(gib(seed, j + 2), gib(seed, j + 1) + gib(seed, j)) << seed.to_string() << " j=" << j;
        }
        // G_j = G_0 F_{j-1} + G_1 F_j holds for every integer j
        for (int j = -30; j <= 30; ++j) {
            EXPECT_EQ(gib(seed, j), seed.g0() * fib(j - 1) + seed.g1() * fib(j));
        }
    }
    EXPECT_EQ(gib(GibonacciSeed::fibonacci(), -7), fib(-7));
    EXPECT_EQ(gib(GibonacciSeed::lucas(), -7), lucas(-7));
}

TEST(Sequences, SeedParsing) {
    EXPECT_EQ(GibonacciSeed::parse("3:-1"), GibonacciSeed(3L, -1L));
    EXPECT_EQ(GibonacciSeed(-2L, 5L).to_string(), "-2:5");
    EXPECT_THROW(GibonacciSeed::parse("0:0"), DomainError);
    EXPECT_THROW(GibonacciSeed::parse("1/2:1"), ParseError);
    EXPECT_THROW(GibonacciSeed::parse("12"), ParseError);
}

TEST(Sequences, Product) {
    const auto f = GibonacciSeed::fibonacci();
    EXPECT_EQ(gib_product(f, 3, 0), 1);
    EXPECT_EQ(gib_product(f, 1, 5), 1 * 1 * 2 * 3 * 5);
    EXPECT_EQ(gib_product(f, -2, 3), 0);  // passes through F_0
    EXPECT_THROW(gib_product(f, 0, -1), DomainError);
}
