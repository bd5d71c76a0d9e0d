#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>

#include "fibharm/exact.hpp"

namespace fibharm {

/// Initial values (G_0, G_1) of a gibonacci sequence; not both zero.
class GibonacciSeed {
public:
    GibonacciSeed(BigInt g0, BigInt g1);
    GibonacciSeed(long g0, long g1) : GibonacciSeed(BigInt(g0), BigInt(g1)) {}

    static GibonacciSeed fibonacci() { return {0L, 1L}; }
    static GibonacciSeed lucas() { return {2L, 1L}; }

    const BigInt& g0() const { return g0_; }
    const BigInt& g1() const { return g1_; }

    /// "g0:g1"
    std::string to_string() const;
    static GibonacciSeed parse(std::string_view text);

    friend bool operator==(const GibonacciSeed& a, const GibonacciSeed& b) {
        return a.g0_ == b.g0_ && a.g1_ == b.g1_;
    }

private:
    BigInt g0_;
    BigInt g1_;
};

/// Lazily extended forward (j >= 0) and backward (j < 0) tables of one
/// gibonacci sequence. References returned by at() stay valid as the tables
/// grow. Not thread-safe; keep one per worker.
class SequenceCache {
public:
    explicit SequenceCache(GibonacciSeed seed);

    const GibonacciSeed& seed() const { return seed_; }
    const BigInt& at(std::int64_t j);

private:
    GibonacciSeed seed_;
    std::deque<BigInt> forward_;   // forward_[j] = G_j
    std::deque<BigInt> backward_;  // backward_[i] = G_{-(i+1)}
};

BigInt fib(std::int64_t j);
BigInt lucas(std::int64_t j);
BigInt gib(const GibonacciSeed& seed, std::int64_t j);

/// G_start * G_{start+1} * ... * G_{start+count-1}; 1 when count = 0.
BigInt gib_product(const GibonacciSeed& seed, std::int64_t start, std::int64_t count);

}  // namespace fibharm
