#include <doctest.h>

#include "divisum/sequence.hpp"
#include "divisum/special_numbers.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace divisum;
using divisum::testing::Gen;

namespace {

std::vector<Rational> seq_values(std::initializer_list<long long> v) {
    return {v.begin(), v.end()};
}

GfSeq e(int k) { return GfSeq(basis_e(k)); }

std::vector<Rational> finite_terms(const FiniteSeq& p) {
    return {p.coeffs().begin(), p.coeffs().end()};
}

}  // namespace

TEST_CASE("basis elements") {
    CHECK(basis_e(0) == FiniteSeq{1});
    CHECK(basis_e(1) == FiniteSeq{0, 1});
    CHECK(basis_e(4) == FiniteSeq{0, 0, 0, 0, 1});
    CHECK_THROWS_AS(basis_e(-1), std::invalid_argument);
    CHECK((basis_e(0) - Rational(4) * basis_e(1)).to_string() == "e0 - 4*e1");
    CHECK(FiniteSeq{Rational(1, 2), 0, -1}.to_string() == "1/2*e0 - e2");
}

TEST_CASE("geometric sequences") {
    CHECK(terms(make_geometric(-1), 6) == seq_values({1, -1, 1, -1, 1, -1}));
    CHECK(make_geometric(-1).gf() == RatFun(Poly{1}, Poly{1, 1}));
    CHECK(terms(make_geometric(Rational(1, 2)), 4) ==
          std::vector<Rational>{1, Rational(1, 2), Rational(1, 4), Rational(1, 8)});
    CHECK(make_geometric(1) == make_P(0));
    CHECK(terms(make_geometric(0), 3) == seq_values({1, 0, 0}));
}

TEST_CASE("powers and alternating powers") {
    CHECK(make_P(0).gf() == RatFun(Poly{1}, Poly{1, -1}));
    CHECK(make_P(1).gf() == RatFun(Poly{1}, Poly{1, -2, 1}));
    CHECK(make_P(2).gf() == RatFun(Poly{1, 1}, Poly{1, -3, 3, -1}));
    CHECK(make_AP(0) == make_geometric(-1));
    CHECK(make_AP(1).gf() == RatFun(Poly{1}, Poly{1, 2, 1}));
    CHECK(make_AP(2).gf() == RatFun(Poly{1, -1}, Poly{1, 3, 3, 1}));
    CHECK_THROWS_AS(make_P(-1), std::invalid_argument);
    CHECK_THROWS_AS(make_AP(-2), std::invalid_argument);
    CHECK_THROWS_AS(make_T(-1), std::invalid_argument);

    for (int n = 0; n <= 6; ++n) {
        auto p = terms(make_P(n), 8);
        auto ap = terms(make_AP(n), 8);
        for (int k = 0; k < 8; ++k) {
            Rational want = Rational(k + 1).pow(n);
            CHECK(p[static_cast<std::size_t>(k)] == want);
            CHECK(ap[static_cast<std::size_t>(k)] == (k % 2 == 0 ? want : -want));
        }
    }
}

TEST_CASE("P_n generating functions match the Eulerian form") {
    // A_n(x) / (1-x)^(n+1) with Eulerian numbers A(n,k) = sum_j (-1)^j binom(n+1,j) (k+1-j)^n
    for (int n = 1; n <= 8; ++n) {
        std::vector<Rational> eulerian(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            BigInt acc;
            for (int j = 0; j <= k + 1; ++j) {
                BigInt t = binomial(n + 1, j) * BigInt::pow(k + 1 - j, static_cast<unsigned long>(n));
                acc += (j % 2 == 0) ? t : -t;
            }
            eulerian[static_cast<std::size_t>(k)] = Rational(acc);
        }
        Poly den{1};
        for (int i = 0; i <= n; ++i) den *= Poly{1, -1};
        CHECK(make_P(n).gf() == RatFun(Poly(eulerian), den));
    }
}

TEST_CASE("T_n") {
    CHECK(make_T(0) == make_geometric(-1));
    CHECK(make_T(1) == make_AP(1));
    CHECK(terms(make_T(2), 4) == seq_values({1, -3, 6, -10}));
    for (int n = 0; n <= 10; ++n) {
        auto t = terms(make_T(n), 6);
        for (int k = 0; k < 6; ++k) {
            BigInt b = binomial(n + k, n);
            CHECK(t[static_cast<std::size_t>(k)] == Rational(k % 2 == 0 ? b : -b));
        }
        GfSeq prod = make_geometric(-1);
        for (int i = 0; i < n; ++i) prod = cauchy_product(prod, make_geometric(-1));
        CHECK(prod == make_T(n));
    }
}

TEST_CASE("Cauchy product examples") {
    CHECK(cauchy_product(make_geometric(-1), make_geometric(-1)) == make_T(1));
    CHECK(cauchy_product(e(1), e(2)) == e(3));
    CHECK(cauchy_product(make_P(0), make_P(0)) == make_P(1));
}

TEST_CASE("divisor product with a finite factor") {
    CHECK(dstar_with_finite(make_P(1), basis_e(0) - Rational(4) * basis_e(1)) == make_AP(1));
    Gen gen(5);
    for (int i = 0; i < 10; ++i) {
        GfSeq u = gen.gfseq();
        CHECK(dstar_with_finite(u, basis_e(0)) == u);
    }
    CHECK(terms(dstar_with_finite(make_P(1), basis_e(1)), 6) == seq_values({0, 1, 0, 2, 0, 3}));
    CHECK(terms(dstar_with_finite(make_P(1), basis_e(0) - Rational(2) * basis_e(1)), 6) ==
          seq_values({1, 0, 3, 0, 5, 0}));
    CHECK(terms(make_geometric(-1), 4) == seq_values({1, -1, 1, -1}));
    CHECK(dstar_with_finite(make_P(1), FiniteSeq()).gf().is_zero());
}

TEST_CASE("gf sequences must be power series") {
    CHECK_THROWS_AS(GfSeq(RatFun(Poly{1}, Poly::x())), NotAPowerSeries);
    CHECK(GfSeq(basis_e(3)).as_finite() == basis_e(3));
    CHECK_FALSE(make_P(0).as_finite().has_value());
}

TEST_CASE("Cauchy product equals brute-force convolution (N = 64)") {
    Gen gen(101);
    for (int i = 0; i < 200; ++i) {
        GfSeq u = gen.gfseq(), v = gen.gfseq();
        auto tu = terms(u, 64), tv = terms(v, 64);
        CHECK(terms(cauchy_product(u, v), 64) == divisum::testing::cauchy_convolution(tu, tv, 64));
    }
}

TEST_CASE("divisor product equals brute-force divisor sums (N = 64)") {
    Gen gen(202);
    for (int i = 0; i < 200; ++i) {
        GfSeq u = gen.gfseq();
        FiniteSeq p = gen.finite(5);
        auto tu = terms(u, 64);
        CHECK(terms(dstar_with_finite(u, p), 64) == divisum::testing::divisor_convolution(tu, finite_terms(p), 64));
    }
}

TEST_CASE("product algebra laws") {
    Gen gen(303);
    for (int i = 0; i < 50; ++i) {
        GfSeq u = gen.gfseq(), v = gen.gfseq(), w = gen.gfseq();
        CHECK(cauchy_product(cauchy_product(u, v), w) == cauchy_product(u, cauchy_product(v, w)));
        CHECK(cauchy_product(u, v) == cauchy_product(v, u));
        CHECK(cauchy_product(u, e(0)) == u);

        FiniteSeq p = gen.finite(4), q = gen.finite(4);
        CHECK(dstar_with_finite(dstar_with_finite(u, p), q) == dstar_with_finite(u, p.dstar(q)));
        CHECK(p.dstar(q) == q.dstar(p));
        CHECK(GfSeq(p.dstar(q)) == dstar_with_finite(GfSeq(p), q));
    }
}

TEST_CASE("mixed identity on basis elements") {
    for (int i = 0; i <= 5; ++i) {
        for (int j = 0; j <= 5; ++j) {
            for (int k = 0; k <= 5; ++k) {
                GfSeq lhs = cauchy_product(dstar_with_finite(e(i), basis_e(k)), dstar_with_finite(e(j), basis_e(k)));
                GfSeq rhs = cauchy_product(dstar_with_finite(cauchy_product(e(i), e(j)), basis_e(k)), e(k));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("Stirling decomposition of alternating powers") {
    for (int n = 0; n <= 10; ++n) {
        GfSeq acc(RatFun{});
        for (int k = 0; k <= n; ++k) {
            Rational c(BigInt::factorial(static_cast<unsigned long>(k)) * stirling2(n, k));
            if ((n - k) % 2 == 1) c = -c;
            acc = acc + c * make_T(k);
        }
        CHECK(acc == make_AP(n));
    }
}
