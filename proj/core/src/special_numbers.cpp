#include "divisum/special_numbers.hpp"

#include <stdexcept>
#include <string>

namespace divisum {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

NumberCache& NumberCache::global() {
    static NumberCache cache;
    return cache;
}

void NumberCache::extend_stirling(int n) {
    while (static_cast<int>(stirling_.size()) <= n) {
        const auto m = static_cast<int>(stirling_.size());
        std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
        if (m == 0) {
            row[0] = 1;
        } else {
            const auto& prev = stirling_.back();
            // S(m,k) = k S(m-1,k) + S(m-1,k-1)
            for (int k = 1; k <= m; ++k) {
                BigInt v = (k < m) ? BigInt(k) * prev[static_cast<std::size_t>(k)] : BigInt(0);
                v += prev[static_cast<std::size_t>(k - 1)];
                row[static_cast<std::size_t>(k)] = std::move(v);
            }
        }
        stirling_.push_back(std::move(row));
    }
}

void NumberCache::extend_bernoulli(int n) {
    while (static_cast<int>(bernoulli_.size()) <= n) {
        const auto m = static_cast<int>(bernoulli_.size());
        // B+_m = 1 - sum_{k<m} binom(m,k) B+_k / (m - k + 1)
        Rational acc(1);
        for (int k = 0; k < m; ++k) {
            BigInt c = BigInt::factorial(static_cast<unsigned long>(m)) /
                       (BigInt::factorial(static_cast<unsigned long>(k)) *
                        BigInt::factorial(static_cast<unsigned long>(m - k)));
            acc -= Rational(c) * bernoulli_[static_cast<std::size_t>(k)] / Rational(m - k + 1);
        }
        bernoulli_.push_back(acc);
    }
}

Rational NumberCache::bernoulli_plus(int n) {
    require(n >= 0, "bernoulli_plus requires n >= 0, got " + std::to_string(n));
    std::lock_guard lock(mu_);
    extend_bernoulli(n);
    return bernoulli_[static_cast<std::size_t>(n)];
}

BigInt NumberCache::stirling2(int n, int k) {
    require(n >= 0 && k >= 0, "stirling2 requires n, k >= 0");
    if (k > n) return 0;
    std::lock_guard lock(mu_);
    extend_stirling(n);
    return stirling_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt NumberCache::binomial(int n, int k) {
    require(n >= 0, "binomial requires n >= 0");
    if (k < 0 || k > n) return 0;
    return BigInt::factorial(static_cast<unsigned long>(n)) /
           (BigInt::factorial(static_cast<unsigned long>(k)) *
            BigInt::factorial(static_cast<unsigned long>(n - k)));
}

Rational bernoulli_plus(int n) {
    return NumberCache::global().bernoulli_plus(n);
}

Rational bernoulli_worpitzky(int n) {
    require(n >= 1, "bernoulli_worpitzky requires n >= 1, got " + std::to_string(n));
    Rational acc;
    Rational weight(1);  // (-2)^(-k)
    for (int k = 0; k < n; ++k) {
        acc += weight * Rational(BigInt::factorial(static_cast<unsigned long>(k)) * stirling2(n, k + 1));
        weight /= Rational(-2);
    }
    Rational scale(BigInt(n), BigInt::pow(2, static_cast<unsigned long>(n + 1)) - 2);
    return scale * acc;
}

BigInt stirling2(int n, int k) {
    return NumberCache::global().stirling2(n, k);
}

BigInt binomial(int n, int k) {
    return NumberCache::global().binomial(n, k);
}

Rational rising_factorial(const Rational& x, int n) {
    require(n >= 0, "rising_factorial requires n >= 0");
    Rational acc(1);
    for (int i = 0; i < n; ++i) acc *= x + Rational(i);
    return acc;
}

Rational falling_factorial(const Rational& x, int n) {
    require(n >= 0, "falling_factorial requires n >= 0");
    Rational acc(1);
    for (int i = 0; i < n; ++i) acc *= x - Rational(i);
    return acc;
}

Rational zeta_neg(int n) {
    require(n >= 0, "zeta_neg requires n >= 0, got " + std::to_string(n));
    return -bernoulli_plus(n + 1) / Rational(n + 1);
}

}  // namespace divisum
