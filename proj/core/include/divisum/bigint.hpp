#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace divisum {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over GMP's mpz_class so the rest of the library never
/// sees GMP types directly. Zero has a single representation.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value);  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class value) : v_(std::move(value)) {}

    /// Parses an optionally signed decimal literal; throws std::invalid_argument.
    static BigInt parse(std::string_view text);

    static BigInt pow(const BigInt& base, unsigned long exponent);
    static BigInt factorial(unsigned long n);

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return v_ == 1; }

    BigInt abs() const;
    bool fits_long() const { return v_.fits_slong_p(); }
    long to_long() const;
    double to_double() const { return v_.get_d(); }
    std::string to_string() const { return v_.get_str(); }

    const mpz_class& mpz() const { return v_; }

    BigInt operator-() const { return BigInt(mpz_class(-v_)); }

    BigInt& operator+=(const BigInt& rhs) { v_ += rhs.v_; return *this; }
    BigInt& operator-=(const BigInt& rhs) { v_ -= rhs.v_; return *this; }
    BigInt& operator*=(const BigInt& rhs) { v_ *= rhs.v_; return *this; }
    // Truncating division; throws std::domain_error on a zero divisor.
    BigInt& operator/=(const BigInt& rhs);
    BigInt& operator%=(const BigInt& rhs);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    /// Non-negative greatest common divisor; gcd(0, 0) = 0.
    friend BigInt gcd(const BigInt& a, const BigInt& b);

private:
    mpz_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

}  // namespace divisum
