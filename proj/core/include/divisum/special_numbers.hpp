#pragma once

#include <mutex>
#include <vector>

#include "divisum/bigint.hpp"
#include "divisum/rational.hpp"

namespace divisum {

/// Memo tables for the combinatorial numbers below. Thread-safe; cached
/// values always equal freshly computed ones.
class NumberCache {
public:
    /// Second Bernoulli numbers, B+_1 = +1/2.
    Rational bernoulli_plus(int n);
    /// Stirling numbers of the second kind; zero outside 0 <= k <= n.
    BigInt stirling2(int n, int k);
    BigInt binomial(int n, int k);

    static NumberCache& global();

private:
    void extend_bernoulli(int n);
    void extend_stirling(int n);

    std::mutex mu_;
    std::vector<Rational> bernoulli_;
    std::vector<std::vector<BigInt>> stirling_;  // row n holds k = 0..n
};

/// B+_n from the defining recurrence; throws std::invalid_argument for n < 0.
Rational bernoulli_plus(int n);

/// B+_n through the Worpitzky-type Stirling sum
///   n / (2^(n+1) - 2) * sum_{k<n} (-2)^(-k) k! S(n, k+1).
/// Throws std::invalid_argument for n < 1.
Rational bernoulli_worpitzky(int n);

BigInt stirling2(int n, int k);
BigInt binomial(int n, int k);

/// x (x+1) ... (x+n-1).
Rational rising_factorial(const Rational& x, int n);
/// x (x-1) ... (x-n+1).
Rational falling_factorial(const Rational& x, int n);

/// zeta(-n) = -B+_{n+1} / (n+1); throws std::invalid_argument for n < 0.
Rational zeta_neg(int n);

}  // namespace divisum
