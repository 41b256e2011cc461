#include "divisum/bigint.hpp"

#include <climits>
#include <ostream>
#include <stdexcept>

namespace divisum {

BigInt::BigInt(long long value) {
    // mpz_class has no long long constructor on every platform.
    if (value >= LONG_MIN && value <= LONG_MAX) {
        v_ = static_cast<long>(value);
    } else {
        v_ = mpz_class(std::to_string(value));
    }
}

BigInt BigInt::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("malformed integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer literal: " + s);
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(mpz_class(s, 10));
}

BigInt BigInt::pow(const BigInt& base, unsigned long exponent) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exponent);
    return BigInt(std::move(r));
}

BigInt BigInt::factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return BigInt(std::move(r));
}

BigInt BigInt::abs() const {
    return BigInt(mpz_class(::abs(v_)));
}

long BigInt::to_long() const {
    if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + to_string());
    return v_.get_si();
}

BigInt& BigInt::operator/=(const BigInt& rhs) {
    if (rhs.is_zero()) throw std::domain_error("integer division by zero");
    mpz_tdiv_q(v_.get_mpz_t(), v_.get_mpz_t(), rhs.v_.get_mpz_t());
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& rhs) {
    if (rhs.is_zero()) throw std::domain_error("integer division by zero");
    mpz_tdiv_r(v_.get_mpz_t(), v_.get_mpz_t(), rhs.v_.get_mpz_t());
    return *this;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) {
    return os << value.to_string();
}

}  // namespace divisum
