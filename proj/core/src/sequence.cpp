#include "divisum/sequence.hpp"

#include <ostream>
#include <stdexcept>

namespace divisum {

namespace {

void require_non_negative(int n, const char* what) {
    if (n < 0) throw std::invalid_argument(std::string(what) + " requires a non-negative index, got " + std::to_string(n));
}

}  // namespace

FiniteSeq::FiniteSeq(std::vector<Rational> coeffs) : poly_(std::move(coeffs)) {}

FiniteSeq::FiniteSeq(const Poly& p) : poly_(p) {}

FiniteSeq FiniteSeq::dstar(const FiniteSeq& other) const {
    const auto a = coeffs();
    const auto b = other.coeffs();
    if (a.empty() || b.empty()) return {};
    // e_i ⊛ e_j = e_k with k + 1 = (i + 1)(j + 1).
    std::vector<Rational> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[(i + 1) * (j + 1) - 1] += a[i] * b[j];
        }
    }
    return FiniteSeq(std::move(out));
}

std::string FiniteSeq::to_string() const {
    const auto c = coeffs();
    if (c.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        Rational mag = c[k].abs();
        if (first) {
            if (c[k].sign() < 0) out += "-";
        } else {
            out += c[k].sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (mag != Rational(1)) out += mag.to_string() + "*";
        out += "e" + std::to_string(k);
    }
    return out;
}

GfSeq::GfSeq(RatFun gf) : gf_(std::move(gf)) {
    if (gf_.den().coeff(0).is_zero()) {
        throw NotAPowerSeries("generating function has a pole at 0: " + gf_.to_string());
    }
}

std::optional<FiniteSeq> GfSeq::as_finite() const {
    if (!is_finite()) return std::nullopt;
    // Monic constant denominator is exactly 1.
    return FiniteSeq(gf_.num());
}

std::ostream& operator<<(std::ostream& os, const FiniteSeq& p) {
    return os << p.to_string();
}

std::ostream& operator<<(std::ostream& os, const GfSeq& u) {
    return os << u.gf();
}

FiniteSeq basis_e(int k) {
    require_non_negative(k, "basis_e");
    return FiniteSeq(Poly::monomial(1, static_cast<std::size_t>(k)));
}

GfSeq make_geometric(const Rational& alpha) {
    return GfSeq(RatFun(Poly::constant(1), Poly{Rational(1), -alpha}));
}

GfSeq make_P(int n) {
    require_non_negative(n, "make_P");
    RatFun u(Poly::constant(1), Poly{Rational(1), Rational(-1)});
    const RatFun x(Poly::x());
    for (int k = 0; k < n; ++k) u = (x * u).derivative();
    return GfSeq(std::move(u));
}

GfSeq make_AP(int n) {
    require_non_negative(n, "make_AP");
    return GfSeq(make_P(n).gf().scale_argument(-1));
}

GfSeq make_T(int n) {
    require_non_negative(n, "make_T");
    Poly den = Poly::constant(1);
    const Poly one_plus_x{Rational(1), Rational(1)};
    for (int k = 0; k <= n; ++k) den *= one_plus_x;
    return GfSeq(RatFun(Poly::constant(1), std::move(den)));
}

GfSeq cauchy_product(const GfSeq& u, const GfSeq& v) {
    return GfSeq(u.gf() * v.gf());
}

GfSeq dstar_with_finite(const GfSeq& u, const FiniteSeq& p) {
    const auto c = p.coeffs();
    RatFun acc;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j].is_zero()) continue;
        RatFun term = substitute_power(u.gf(), static_cast<int>(j + 1));
        acc = acc + RatFun(Poly::monomial(c[j], j)) * term;
    }
    return GfSeq(std::move(acc));
}

std::vector<Rational> terms(const GfSeq& u, int n) {
    return power_series_coeffs(u.gf(), n);
}

}  // namespace divisum
