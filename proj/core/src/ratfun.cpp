#include "divisum/ratfun.hpp"

#include <ostream>

namespace divisum {

namespace {

// Multiplicity of the root `point` in a nonzero polynomial.
int root_multiplicity(Poly p, const Rational& point) {
    const Poly factor{-point, Rational(1)};
    int mult = 0;
    while (p.degree() > 0 && p.eval(point).is_zero()) {
        p = divrem(p, factor).first;
        ++mult;
    }
    return mult;
}

// First n coefficients of num/den as a power series; requires den(0) != 0.
std::vector<Rational> series_divide(const Poly& num, const Poly& den, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n));
    const Rational inv0 = den.coeff(0).inverse();
    const int dd = den.degree();
    for (int k = 0; k < n; ++k) {
        Rational acc = num.coeff(static_cast<std::size_t>(k));
        for (int i = 1; i <= dd && i <= k; ++i) {
            acc -= den.coeffs()[static_cast<std::size_t>(i)] * out[static_cast<std::size_t>(k - i)];
        }
        out[static_cast<std::size_t>(k)] = acc * inv0;
    }
    return out;
}

}  // namespace

RatFun::RatFun(Poly num) : num_(std::move(num)), den_(Poly::constant(1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = divrem(num_, g).first;
        den_ = divrem(den_, g).first;
    }
    Rational scale = den_.leading().inverse();
    num_ *= scale;
    den_ *= scale;
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::scale_argument(const Rational& a) const {
    if (a.is_zero()) return RatFun(Poly::constant(num_.coeff(0)), Poly::constant(den_.coeff(0)));
    return RatFun(num_.compose_linear(0, a), den_.compose_linear(0, a));
}

RatFun RatFun::operator-() const {
    return RatFun(-num_, den_, Reduced{});
}

RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
    return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
    return a + (-b);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
    return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFun::to_string() const {
    return num_.to_string() + " / " + den_.to_string();
}

int vanishing_order(const RatFun& f, const Rational& point) {
    if (f.is_zero()) throw std::domain_error("vanishing order of the zero function is undefined");
    // Reducedness means at most one side has the root.
    return root_multiplicity(f.num(), point) - root_multiplicity(f.den(), point);
}

LaurentSlice laurent_at_one(const RatFun& f, int count) {
    if (f.is_zero()) throw std::domain_error("Laurent expansion of the zero function is undefined");
    if (count < 1) throw std::invalid_argument("laurent_at_one requires count >= 1");
    // x = 1 - t
    Poly n = f.num().compose_linear(1, -1);
    Poly d = f.den().compose_linear(1, -1);
    std::size_t a = n.lowest_degree();
    std::size_t b = d.lowest_degree();
    LaurentSlice out;
    out.base_order = static_cast<int>(a) - static_cast<int>(b);
    out.coeffs = series_divide(n.shift_down(a), d.shift_down(b), count);
    return out;
}

RatFun substitute_power(const RatFun& f, int m) {
    if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
    auto um = static_cast<unsigned>(m);
    return RatFun(f.num().compose_power(um), f.den().compose_power(um));
}

std::vector<Rational> power_series_coeffs(const RatFun& f, int n) {
    if (n < 0) throw std::invalid_argument("power_series_coeffs requires n >= 0");
    if (f.den().coeff(0).is_zero()) {
        throw NotAPowerSeries("denominator vanishes at 0: " + f.to_string());
    }
    return series_divide(f.num(), f.den(), n);
}

Rational eval_at(const RatFun& f, const Rational& point) {
    Rational d = f.den().eval(point);
    if (d.is_zero()) throw PoleAtPoint("pole at " + point.to_string() + " of " + f.to_string());
    return f.num().eval(point) / d;
}

std::ostream& operator<<(std::ostream& os, const RatFun& f) {
    return os << f.to_string();
}

}  // namespace divisum
