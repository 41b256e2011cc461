#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "divisum/bigint.hpp"

namespace divisum {

/// Raised for a zero denominator or a division by zero.
class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Exact rational number in canonical form.
///
/// Invariants: den > 0, gcd(|num|, den) = 1, zero is 0/1. Every constructor
/// and operation re-establishes them, so structural equality is value equality.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt num, BigInt den);

    /// Parses "a" or "a/b" with an optional leading sign.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    int sign() const { return num_.sign(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }

    Rational abs() const { return Rational(num_.abs(), den_, Canonical{}); }
    Rational inverse() const;
    Rational pow(long exponent) const;

    double to_double() const;
    /// "a/b", or "a" when b = 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(-num_, den_, Canonical{}); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    struct Canonical {};
    Rational(BigInt num, BigInt den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace divisum
