#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "divisum/poly.hpp"
#include "divisum/ratfun.hpp"
#include "divisum/rational.hpp"

namespace divisum {

/// Finitely supported sequence; coefficient k multiplies the basis element e_k.
/// Trailing zeros are trimmed, so the zero sequence is empty.
class FiniteSeq {
public:
    FiniteSeq() = default;
    explicit FiniteSeq(std::vector<Rational> coeffs);
    FiniteSeq(std::initializer_list<Rational> coeffs) : FiniteSeq(std::vector<Rational>(coeffs)) {}
    explicit FiniteSeq(const Poly& p);

    std::span<const Rational> coeffs() const { return poly_.coeffs(); }
    Rational at(std::size_t k) const { return poly_.coeff(k); }
    bool is_zero() const { return poly_.is_zero(); }
    /// Number of stored coefficients (last index + 1).
    std::size_t size() const { return poly_.coeffs().size(); }

    /// Sum of the coefficients: the ordinary (and extended) sum of the sequence.
    Rational sum() const { return poly_.sum_of_coeffs(); }
    const Poly& poly() const { return poly_; }

    /// Divisor-indexed product of two finite sequences.
    FiniteSeq dstar(const FiniteSeq& other) const;

    FiniteSeq operator-() const { return FiniteSeq(-poly_); }
    friend FiniteSeq operator+(const FiniteSeq& a, const FiniteSeq& b) { return FiniteSeq(a.poly_ + b.poly_); }
    friend FiniteSeq operator-(const FiniteSeq& a, const FiniteSeq& b) { return FiniteSeq(a.poly_ - b.poly_); }
    /// Cauchy product.
    friend FiniteSeq operator*(const FiniteSeq& a, const FiniteSeq& b) { return FiniteSeq(a.poly_ * b.poly_); }
    friend FiniteSeq operator*(const Rational& s, const FiniteSeq& a) { return FiniteSeq(a.poly_ * s); }
    friend bool operator==(const FiniteSeq&, const FiniteSeq&) = default;

    /// Basis notation, e.g. "e0 - 4*e1"; "0" for the zero sequence.
    std::string to_string() const;

private:
    Poly poly_;
};

/// Sequence with a rational generating function, stored as the reduced gf.
/// The gf is a genuine power series: its denominator does not vanish at 0.
class GfSeq {
public:
    GfSeq() = default;
    /// Throws NotAPowerSeries when den(gf)(0) = 0.
    explicit GfSeq(RatFun gf);
    GfSeq(const FiniteSeq& p) : gf_(p.poly()) {}  // NOLINT(google-explicit-constructor)

    const RatFun& gf() const { return gf_; }
    bool is_finite() const { return gf_.is_polynomial(); }
    std::optional<FiniteSeq> as_finite() const;

    GfSeq operator-() const { return GfSeq(-gf_, Trusted{}); }
    friend GfSeq operator+(const GfSeq& a, const GfSeq& b) { return GfSeq(a.gf_ + b.gf_, Trusted{}); }
    friend GfSeq operator-(const GfSeq& a, const GfSeq& b) { return GfSeq(a.gf_ - b.gf_, Trusted{}); }
    friend GfSeq operator*(const Rational& s, const GfSeq& a) { return GfSeq(RatFun(Poly::constant(s)) * a.gf_, Trusted{}); }
    friend bool operator==(const GfSeq&, const GfSeq&) = default;

private:
    struct Trusted {};
    GfSeq(RatFun gf, Trusted) : gf_(std::move(gf)) {}

    RatFun gf_;
};

std::ostream& operator<<(std::ostream& os, const FiniteSeq& p);
std::ostream& operator<<(std::ostream& os, const GfSeq& u);

/// e_k; throws std::invalid_argument for k < 0.
FiniteSeq basis_e(int k);

/// (alpha^k): gf 1/(1 - alpha x).
GfSeq make_geometric(const Rational& alpha);

/// ((k+1)^n): built by U_0 = 1/(1-x), U_{n+1} = (x U_n)'.
GfSeq make_P(int n);

/// ((-1)^k (k+1)^n): make_P(n) with x replaced by -x.
GfSeq make_AP(int n);

/// ((-1)^k binom(n+k, n)): gf 1/(1+x)^(n+1).
GfSeq make_T(int n);

GfSeq cauchy_product(const GfSeq& u, const GfSeq& v);

/// u ⊛ p for a finite right factor: gf sum_j p_j x^j U(x^(j+1)).
GfSeq dstar_with_finite(const GfSeq& u, const FiniteSeq& p);

/// First n terms.
std::vector<Rational> terms(const GfSeq& u, int n);

}  // namespace divisum
