#include "divisum/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace divisum {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
    return Poly(std::vector<Rational>{c});
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational();
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational Poly::eval(const Rational& point) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Rational Poly::sum_of_coeffs() const {
    Rational acc;
    for (const auto& c : c_) acc += c;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long long>(k));
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * leading().inverse();
}

Poly Poly::compose_power(unsigned m) const {
    if (m == 0) throw std::invalid_argument("compose_power requires m >= 1");
    if (c_.empty()) return {};
    std::vector<Rational> v((c_.size() - 1) * m + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) v[k * m] = c_[k];
    return Poly(std::move(v));
}

Poly Poly::compose_linear(const Rational& a, const Rational& b) const {
    // Horner in the polynomial ring: acc = acc * (a + b x) + c_k.
    Poly lin{a, b};
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= lin;
        acc += Poly::constant(*it);
    }
    return acc;
}

std::size_t Poly::lowest_degree() const {
    if (c_.empty()) throw std::logic_error("lowest degree of the zero polynomial");
    std::size_t k = 0;
    while (c_[k].is_zero()) ++k;
    return k;
}

Poly Poly::shift_down(std::size_t k) const {
    if (k >= c_.size()) return {};
    return Poly(std::vector<Rational>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    if (c_.empty() || rhs.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= scalar;
    return *this;
}

std::string Poly::to_string(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const auto bc = b.coeffs();
    const Rational inv_lead = b.leading().inverse();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lead;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
    trim(p);
    if (p.empty()) return;
    mpz_class g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.back() < 0) g = -g;
    if (g != 1) {
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
}

// Primitive integer multiple of a nonzero p, with positive leading coefficient.
ZPoly primitive_integer(const Poly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().mpz().get_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.num().mpz() * (l / c.den().mpz()));
    make_primitive(out);
    return out;
}

constexpr std::uint64_t kPrime = 4294967291ULL;  // largest prime below 2^32

std::uint64_t mod_prime(const mpz_class& v) {
    return mpz_fdiv_ui(v.get_mpz_t(), kPrime);
}

std::uint64_t inverse_mod(std::uint64_t a) {
    std::uint64_t result = 1, base = a, e = kPrime - 2;
    while (e) {
        if (e & 1) result = result * base % kPrime;
        base = base * base % kPrime;
        e >>= 1;
    }
    return result;
}

// Degree of gcd(a, b) over GF(kPrime).
int gcd_degree_mod_prime(const ZPoly& a, const ZPoly& b) {
    auto reduce = [](const ZPoly& z) {
        std::vector<std::uint64_t> r;
        r.reserve(z.size());
        for (const auto& c : z) r.push_back(mod_prime(c));
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto x = reduce(a), y = reduce(b);
    while (!y.empty()) {
        const std::uint64_t inv = inverse_mod(y.back());
        const std::size_t dy = y.size() - 1;
        while (x.size() >= y.size()) {
            const std::uint64_t q = x.back() * inv % kPrime;
            const std::size_t shift = x.size() - y.size();
            for (std::size_t j = 0; j <= dy; ++j) {
                x[shift + j] = (x[shift + j] + (kPrime - q) * y[j]) % kPrime;
            }
            while (!x.empty() && x.back() == 0) x.pop_back();
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

// Primitive part of the pseudo-remainder of a by b (deg a >= deg b >= 0).
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        const mpz_class la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
        trim(a);
    }
    make_primitive(a);
    return a;
}

}  // namespace

// Primitive PRS over the integers, after a modular check that settles the
// common coprime case without any big-number work.
Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = primitive_integer(a);
    ZPoly y = primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    if (y.size() == 1) return Poly::constant(1);
    if (mod_prime(x.back()) != 0 && mod_prime(y.back()) != 0 && gcd_degree_mod_prime(x, y) == 0) {
        return Poly::constant(1);
    }
    while (!y.empty()) {
        ZPoly r = primitive_prem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> c;
    c.reserve(x.size());
    for (auto& v : x) c.emplace_back(BigInt(std::move(v)));
    return Poly(std::move(c)).monic();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.to_string();
}

}  // namespace divisum
