#include "fibharm/sequences.hpp"

#include <map>
#include <utility>

namespace fibharm {

GibonacciSeed::GibonacciSeed(BigInt g0, BigInt g1) : g0_(std::move(g0)), g1_(std::move(g1)) {
    if (g0_ == 0 && g1_ == 0) throw DomainError("gibonacci seed 0:0 is degenerate");
}

std::string GibonacciSeed::to_string() const { return g0_.get_str() + ":" + g1_.get_str(); }

GibonacciSeed GibonacciSeed::parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("seed must look like g0:g1, got '" + std::string(text) + "'");
    const Rational a = Rational::parse(text.substr(0, colon));
    const Rational b = Rational::parse(text.substr(colon + 1));
    if (!a.is_integer() || !b.is_integer()) throw ParseError("seed values must be integers: '" + std::string(text) + "'");
    return {a.num(), b.num()};
}

SequenceCache::SequenceCache(GibonacciSeed seed) : seed_(std::move(seed)) {
    forward_ = {seed_.g0(), seed_.g1()};
}

const BigInt& SequenceCache::at(std::int64_t j) {
    if (j >= 0) {
        const auto idx = static_cast<std::size_t>(j);
        while (forward_.size() <= idx) {
            const std::size_t n = forward_.size();
            forward_.push_back(forward_[n - 1] + forward_[n - 2]);
        }
        return forward_[idx];
    }
    const auto idx = static_cast<std::size_t>(-j - 1);
    while (backward_.size() <= idx) {
        // G_{j-2} = G_j - G_{j-1}
        const std::size_t n = backward_.size();
        const BigInt& next = n == 0 ? forward_[0] : backward_[n - 1];
        const BigInt& after = n == 0 ? forward_[1] : (n == 1 ? forward_[0] : backward_[n - 2]);
        backward_.push_back(after - next);
    }
    return backward_[idx];
}

namespace {

SequenceCache& cache_for(const GibonacciSeed& seed) {
    thread_local std::map<std::pair<std::string, std::string>, SequenceCache> caches;
    auto key = std::make_pair(seed.g0().get_str(), seed.g1().get_str());
    auto it = caches.find(key);
    if (it == caches.end()) it = caches.emplace(std::move(key), SequenceCache(seed)).first;
    return it->second;
}

SequenceCache& fib_cache() {
    thread_local SequenceCache cache(GibonacciSeed::fibonacci());
    return cache;
}

SequenceCache& lucas_cache() {
    thread_local SequenceCache cache(GibonacciSeed::lucas());
    return cache;
}

}  // namespace

BigInt fib(std::int64_t j) {
    if (j >= 0) return fib_cache().at(j);
    // F_{-j} = (-1)^{j-1} F_j
    BigInt v = fib_cache().at(-j);
    return (-j) % 2 == 0 ? BigInt(-v) : v;
}

BigInt lucas(std::int64_t j) {
    if (j >= 0) return lucas_cache().at(j);
    BigInt v = lucas_cache().at(-j);
    return (-j) % 2 == 0 ? v : BigInt(-v);
}

BigInt gib(const GibonacciSeed& seed, std::int64_t j) { return cache_for(seed).at(j); }

BigInt gib_product(const GibonacciSeed& seed, std::int64_t start, std::int64_t count) {
    if (count < 0) throw DomainError("gib_product: negative count");
    SequenceCache& cache = cache_for(seed);
    BigInt p = 1;
    for (std::int64_t i = 0; i < count; ++i) p *= cache.at(start + i);
    return p;
}

}  // namespace fibharm
