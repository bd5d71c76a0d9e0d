#pragma once

// Abel partial summation and binomial-transform pairs, checked exactly.

#include <cstdint>
#include <random>
#include <vector>

#include "fibharm/check_report.hpp"
#include "fibharm/exact.hpp"
#include "fibharm/sequences.hpp"

namespace fibharm {

/// Dense run of values v_start, v_{start+1}, ...; never empty.
class FiniteSequence {
public:
    FiniteSequence(std::int64_t start, std::vector<LogValue> values);

    std::int64_t start() const { return start_; }
    std::int64_t last() const { return start_ + static_cast<std::int64_t>(values_.size()) - 1; }
    std::size_t size() const { return values_.size(); }
    bool covers(std::int64_t lo, std::int64_t hi) const { return lo >= start_ && hi <= last(); }

    /// DomainError outside [start, last].
    const LogValue& operator[](std::int64_t j) const;
    const std::vector<LogValue>& values() const { return values_; }

    friend bool operator==(const FiniteSequence&, const FiniteSequence&) = default;

private:
    std::int64_t start_;
    std::vector<LogValue> values_;
};

enum class AbelVariant { Difference, Sum };

/// Difference: sum b_k (a_{k+1} - a_k) = sum a_{k+1}(b_k - b_{k+1}) + a_{n+1}b_{n+1} - a_1 b_1.
/// Sum:        sum b_k (a_{k+1} + a_k) = sum a_{k+1}(b_k + b_{k+1}) - a_{n+1}b_{n+1} + a_1 b_1.
/// Both sums over k = 1..n. DomainError unless a and b cover [1, n+1].
CheckReport abel_check(const FiniteSequence& a, const FiniteSequence& b, std::int64_t n, AbelVariant variant);

/// sigma_n = sum_k (-1)^k C(n,k) s_k over the whole of s (which must start at 0).
FiniteSequence binomial_transform(const FiniteSequence& s);

/// PairMismatch unless sigma agrees with the transform of s on [0, n].
void require_transform_pair(const FiniteSequence& s, const FiniteSequence& sigma, std::int64_t n);

/// sum (-1)^k C(n,k) H_k s_k = H_n sigma_n - sum_{k<n} sigma_k / (n-k).
CheckReport boyad1_check(const FiniteSequence& s, const FiniteSequence& sigma, std::int64_t n);

/// sum (-1)^{k+1} C(n,k) G_k s_k = sum (-1)^k C(n,k) G_{n-2k} sigma_k.
CheckReport boyad2_check(const FiniteSequence& s, const FiniteSequence& sigma, const GibonacciSeed& seed,
                         std::int64_t n);

/// sum (-1)^k C(n,k) C(r+m+n-k+1, m+1)^{-1} t_k
///   = (m+1)/(r+1) sum (-1)^{n-k} C(n,k) C(r+m+n-k+1, r+1)^{-1} tau_k.
/// Skipped when one of the binomials vanishes.
CheckReport gouldqu_check(const FiniteSequence& t, const FiniteSequence& tau, std::int64_t n, HalfInt m, HalfInt r);

/// Sequence of `length` rationals p/q with p, q in [-9, 9], q != 0.
FiniteSequence random_rational_sequence(std::mt19937_64& rng, std::int64_t start, std::size_t length);

}  // namespace fibharm
