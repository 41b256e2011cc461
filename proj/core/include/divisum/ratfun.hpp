#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "divisum/poly.hpp"
#include "divisum/rational.hpp"

namespace divisum {

class PoleAtPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class NotAPowerSeries : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Reduced rational function num/den over Rational.
///
/// Invariants: den != 0, gcd(num, den) = 1, den is monic, and zero is 0/1.
/// Two RatFun values are equal iff they denote the same function.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::constant(1)) {}
    RatFun(Poly num);  // NOLINT(google-explicit-constructor)
    /// Reduces and normalizes; throws DivisionByZero when den is zero.
    RatFun(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun derivative() const;
    /// f(a*x).
    RatFun scale_argument(const Rational& a) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun& a, const RatFun& b);
    friend RatFun operator-(const RatFun& a, const RatFun& b);
    friend RatFun operator*(const RatFun& a, const RatFun& b);
    friend RatFun operator/(const RatFun& a, const RatFun& b);
    friend bool operator==(const RatFun&, const RatFun&) = default;

    /// "num / den" with both sides in ascending-power form.
    std::string to_string() const;

private:
    struct Reduced {};
    RatFun(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

/// Leading part of the expansion of f in powers of t = 1 - x:
/// f = sum_i coeffs[i] * t^(base_order + i).
struct LaurentSlice {
    int base_order = 0;
    std::vector<Rational> coeffs;

    friend bool operator==(const LaurentSlice&, const LaurentSlice&) = default;
};

/// Normalizing constructor under its operation name.
inline RatFun ratfun_normalize(Poly num, Poly den) {
    return RatFun(std::move(num), std::move(den));
}

/// The r with f = (x - point)^r * g, g finite and nonzero at point. Negative
/// r is a pole. Throws std::domain_error for f = 0.
int vanishing_order(const RatFun& f, const Rational& point);

/// First `count` Laurent coefficients of f at x = 1 in the variable t = 1 - x,
/// starting at vanishing_order(f, 1).
LaurentSlice laurent_at_one(const RatFun& f, int count);

/// f(x^m), m >= 1.
RatFun substitute_power(const RatFun& f, int m);

/// First n Taylor coefficients at 0, via the recurrence induced by den(f).
/// Throws NotAPowerSeries when den(0) = 0.
std::vector<Rational> power_series_coeffs(const RatFun& f, int n);

/// Exact value f(point); throws PoleAtPoint at a pole.
Rational eval_at(const RatFun& f, const Rational& point);

std::ostream& operator<<(std::ostream& os, const RatFun& f);

}  // namespace divisum
