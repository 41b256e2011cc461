#pragma once

// Brute-force reference computations. None of these call into the code paths
// they are used to check.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "divisum/rational.hpp"

namespace divisum::testing {

/// (u ⊗ v)_n = sum_{k<=n} u_k v_{n-k}, first n terms.
inline std::vector<Rational> cauchy_convolution(const std::vector<Rational>& u, const std::vector<Rational>& v,
                                                std::size_t n) {
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= i; ++k) {
            if (k < u.size() && i - k < v.size()) out[i] += u[k] * v[i - k];
        }
    }
    return out;
}

/// (u ⊛ v)_n = sum over i*j = n+1 of u_{i-1} v_{j-1}, first n terms.
inline std::vector<Rational> divisor_convolution(const std::vector<Rational>& u, const std::vector<Rational>& v,
                                                 std::size_t n) {
    std::vector<Rational> out(n);
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t i = 1; i <= m; ++i) {
            if (m % i != 0) continue;
            const std::size_t j = m / i;
            if (i - 1 < u.size() && j - 1 < v.size()) out[m - 1] += u[i - 1] * v[j - 1];
        }
    }
    return out;
}

/// Coefficients of p(1 - t) in t, expanding each x^k = (1 - t)^k binomially.
inline std::vector<Rational> substitute_one_minus_t(const std::vector<Rational>& p) {
    std::vector<Rational> out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        // binom(k, i) (-1)^i
        Rational b(1);
        for (std::size_t i = 0; i <= k; ++i) {
            out[i] += p[k] * ((i % 2 == 0) ? b : -b);
            b = b * Rational(static_cast<long long>(k - i)) / Rational(static_cast<long long>(i + 1));
        }
    }
    return out;
}

struct TruncatedLaurent {
    int base_order = 0;
    std::vector<Rational> coeffs;
};

/// Laurent coefficients of num/den at x = 1 in t = 1 - x: strip powers of t
/// from both sides, then long-divide truncated series.
inline TruncatedLaurent laurent_oracle(const std::vector<Rational>& num, const std::vector<Rational>& den,
                                       std::size_t count) {
    auto n = substitute_one_minus_t(num);
    auto d = substitute_one_minus_t(den);
    std::size_t a = 0;
    while (n[a].is_zero()) ++a;
    std::size_t b = 0;
    while (d[b].is_zero()) ++b;
    n.erase(n.begin(), n.begin() + static_cast<std::ptrdiff_t>(a));
    d.erase(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(b));
    n.resize(std::max(n.size(), count));
    std::vector<Rational> q(count);
    std::vector<Rational> rem = n;
    for (std::size_t k = 0; k < count; ++k) {
        q[k] = rem[k] / d[0];
        for (std::size_t i = 0; i < d.size() && k + i < rem.size(); ++i) rem[k + i] -= q[k] * d[i];
    }
    return {static_cast<int>(a) - static_cast<int>(b), q};
}

/// Number of partitions of an n-set into k nonempty blocks, by enumerating
/// restricted growth strings.
inline long long count_set_partitions(int n, int k) {
    if (n == 0) return k == 0 ? 1 : 0;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    long long count = 0;
    while (true) {
        int blocks = 0;
        for (int v : rgs) blocks = std::max(blocks, v + 1);
        if (blocks == k) ++count;
        // next restricted growth string: a_i <= 1 + max(a_0..a_{i-1})
        int i = n - 1;
        while (i > 0) {
            int mx = 0;
            for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[static_cast<std::size_t>(j)]);
            if (rgs[static_cast<std::size_t>(i)] <= mx) {
                ++rgs[static_cast<std::size_t>(i)];
                for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
                break;
            }
            --i;
        }
        if (i == 0) return count;
    }
}

/// Classical Bernoulli numbers (B_1 = -1/2) from sum_{k<=n} binom(n+1,k) B_k = 0,
/// with the sign of B_1 flipped to the B+ convention.
inline std::vector<Rational> bernoulli_plus_oracle(int n) {
    std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        Rational c(1);  // binom(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += c * b[static_cast<std::size_t>(k)];
            c = c * Rational(m + 1 - k) / Rational(k + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
    }
    if (n >= 1) b[1] = -b[1];
    return b;
}

/// Monic gcd by Euclid's algorithm on raw rational coefficient vectors
/// (ascending order, no trailing zeros).
inline std::vector<Rational> euclid_gcd_oracle(std::vector<Rational> a, std::vector<Rational> b) {
    auto strip = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        while (a.size() >= b.size()) {
            const Rational q = a.back() / b.back();
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= q * b[j];
            a.pop_back();
            strip(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        const Rational lead = a.back();
        for (auto& c : a) c = c / lead;
    }
    return a;
}

}  // namespace divisum::testing
