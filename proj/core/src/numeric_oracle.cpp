#include "divisum/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divisum {

namespace {

constexpr int kFirstPointExponent = 4;
constexpr int kLastPointExponent = 10;
constexpr int kHarmonicTerms = 64;

std::vector<double> to_doubles(const Poly& p) {
    std::vector<double> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_double());
    return out;
}

// sum_{k<n} u_k x^k through the recurrence for v_k = u_k x^k, whose gf is U(x z).
// Extended precision: the Richardson table amplifies cancellation error.
long double abel_partial_sum(const std::vector<double>& num, const std::vector<double>& den, long double x, int n) {
    std::vector<long double> a(num.size());
    std::vector<long double> d(den.size());
    long double xp = 1.0L;
    for (std::size_t i = 0; i < std::max(num.size(), den.size()); ++i) {
        if (i < num.size()) a[i] = num[i] * xp;
        if (i < den.size()) d[i] = den[i] * xp;
        xp *= x;
    }
    std::vector<long double> v(static_cast<std::size_t>(n));
    long double sum = 0.0L;
    for (std::size_t k = 0; k < v.size(); ++k) {
        long double acc = k < a.size() ? a[k] : 0.0L;
        for (std::size_t i = 1; i < d.size() && i <= k; ++i) acc -= d[i] * v[k - i];
        v[k] = acc / d[0];
        sum += v[k];
    }
    return sum;
}

}  // namespace

AbelEstimate abel_estimate(const GfSeq& u, int n_terms) {
    if (n_terms < 64) throw std::invalid_argument("abel_estimate requires n_terms >= 64");
    if (u.gf().den().eval(Rational(1)).is_zero()) {
        throw PoleAtOne("generating function has a pole at 1: " + u.gf().to_string());
    }
    const auto num = to_doubles(u.gf().num());
    const auto den = to_doubles(u.gf().den());

    AbelEstimate out;
    out.terms_per_point = n_terms;
    // table[i][j]: j-th Richardson level for step h_i = 2^-(4+i).
    std::vector<std::vector<long double>> table;
    for (int e = kFirstPointExponent; e <= kLastPointExponent; ++e) {
        const double x = 1.0 - std::ldexp(1.0, -e);
        out.points_used.push_back(x);
        std::vector<long double> row{abel_partial_sum(num, den, x, n_terms)};
        for (std::size_t j = 1; j <= table.size(); ++j) {
            const long double factor = std::ldexp(1.0L, static_cast<int>(j)) - 1.0L;
            row.push_back(row[j - 1] + (row[j - 1] - table.back()[j - 1]) / factor);
        }
        table.push_back(std::move(row));
    }
    out.value = static_cast<double>(table.back().back());
    return out;
}

std::vector<Rational> harmonic_dstar_terms(int n) {
    if (n < 0) throw std::invalid_argument("harmonic_dstar_terms requires n >= 0");
    const FiniteSeq p = basis_e(0) - basis_e(1);
    std::vector<Rational> out(static_cast<std::size_t>(n));
    // (H ⊛ p)_k = sum over i*j = k+1 of H_{i-1} p_{j-1}
    for (int k = 0; k < n; ++k) {
        const int target = k + 1;
        Rational acc;
        for (int j = 1; j <= target; ++j) {
            if (target % j != 0) continue;
            const Rational pj = p.at(static_cast<std::size_t>(j - 1));
            if (pj.is_zero()) continue;
            const int i = target / j;
            acc += pj * Rational(BigInt(1), BigInt(i));
        }
        out[static_cast<std::size_t>(k)] = acc;
    }
    return out;
}

double averaged_partial_sums(std::span<const double> terms) {
    if (terms.empty()) return 0.0;
    std::vector<double> s(terms.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        acc += terms[k];
        s[k] = acc;
    }
    while (s.size() > 1) {
        for (std::size_t k = 0; k + 1 < s.size(); ++k) s[k] = 0.5 * (s[k] + s[k + 1]);
        s.pop_back();
    }
    return s.front();
}

double harmonic_demo() {
    const auto exact = harmonic_dstar_terms(kHarmonicTerms);
    std::vector<double> t;
    t.reserve(exact.size());
    for (const auto& q : exact) t.push_back(q.to_double());
    return averaged_partial_sums(t);
}

}  // namespace divisum
