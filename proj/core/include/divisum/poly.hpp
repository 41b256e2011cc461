#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "divisum/rational.hpp"

namespace divisum {

/// Dense univariate polynomial over Rational, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero. The monomial x^k plays the role of the basis sequence e_k.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, std::size_t degree);
    static Poly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::span<const Rational> coeffs() const { return c_; }
    /// Coefficient of x^k (zero past the degree).
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;

    Rational eval(const Rational& point) const;
    Rational sum_of_coeffs() const;
    Poly derivative() const;
    Poly monic() const;
    /// p(x^m), m >= 1.
    Poly compose_power(unsigned m) const;
    /// p(a + b*x).
    Poly compose_linear(const Rational& a, const Rational& b) const;
    /// Index of the lowest nonzero coefficient; the zero polynomial has none.
    std::size_t lowest_degree() const;
    /// Drops the lowest k coefficients, i.e. divides by x^k (assumes they vanish).
    Poly shift_down(std::size_t k) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& scalar);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly&, const Poly&) = default;

    /// Ascending-power text such as "1 - 2*x + x^2"; "0" for zero.
    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division; throws DivisionByZero when the divisor is zero.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace divisum
