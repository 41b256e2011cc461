#include "divisum/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "divisum/stability.hpp"
#include "linear_algebra.hpp"

namespace divisum {

namespace {

const Rational kOne(1);

bool has_pole_at_one(const GfSeq& u) {
    return !u.gf().den().eval(kOne).is_zero();
}

// Principal part of x^j U(x^(j+1)) at x = 1: coefficients of t^-r .. t^-1.
std::vector<Rational> principal_part(const GfSeq& u, std::size_t j, int r) {
    RatFun basis = RatFun(Poly::monomial(1, j)) * substitute_power(u.gf(), static_cast<int>(j + 1));
    LaurentSlice s = laurent_at_one(basis, r);
    std::vector<Rational> out(static_cast<std::size_t>(r));
    // base_order >= -r; shift so index i is the coefficient of t^(i - r).
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        const int order = s.base_order + static_cast<int>(i);
        if (order < 0) out[static_cast<std::size_t>(order + r)] = s.coeffs[i];
    }
    return out;
}

Rational vector_sum(const std::vector<Rational>& v) {
    Rational acc;
    for (const auto& x : v) acc += x;
    return acc;
}

// Admissible nullspace vector restricted to `cols`, expanded to length J+1.
std::optional<FiniteSeq> admissible_on(const std::vector<std::vector<Rational>>& columns,
                                       const std::vector<std::size_t>& cols, int r, std::size_t width) {
    detail::Matrix m(static_cast<std::size_t>(r), std::vector<Rational>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (int i = 0; i < r; ++i) m[static_cast<std::size_t>(i)][c] = columns[cols[c]][static_cast<std::size_t>(i)];
    }
    for (auto& v : detail::nullspace(std::move(m), cols.size())) {
        if (vector_sum(v).is_zero()) continue;
        std::vector<Rational> p(width);
        for (std::size_t c = 0; c < cols.size(); ++c) p[cols[c]] = v[c];
        auto first = std::find_if(p.begin(), p.end(), [](const Rational& x) { return !x.is_zero(); });
        const Rational scale = first->inverse();
        for (auto& x : p) x *= scale;
        return FiniteSeq(std::move(p));
    }
    return std::nullopt;
}

// Calls fn on each subset of {0..n-1} of size k in lexicographic order until it returns true.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::variant<CauchySum, NonMembershipWitness> sum_cauchy_ext(const GfSeq& u) {
    const Poly& den = u.gf().den();
    const Rational scale = den.coeff(0).inverse();
    FiniteSeq m(den * scale);
    FiniteSeq product(u.gf().num() * scale);
    if (m.sum().is_zero()) return NonMembershipWitness{std::move(m), std::move(product)};
    Rational value = product.sum() / m.sum();
    return CauchySum{std::move(value), CauchyCertificate{std::move(m), std::move(product)}};
}

std::optional<FiniteSeq> solve_pole_cancellation(const GfSeq& u, int max_support) {
    if (u.gf().is_zero() || has_pole_at_one(u)) {
        throw std::invalid_argument("solve_pole_cancellation requires a pole at 1");
    }
    const int r = -vanishing_order(u.gf(), kOne);
    std::vector<std::vector<Rational>> columns;
    for (int J = 0; J <= max_support; ++J) {
        columns.push_back(principal_part(u, static_cast<std::size_t>(J), r));
        const auto width = static_cast<std::size_t>(J) + 1;
        std::vector<std::size_t> all(width);
        for (std::size_t i = 0; i < width; ++i) all[i] = i;
        // Every admissible vector on a subset is admissible on the full range,
        // so the full range decides whether this J is the first feasible one.
        if (!admissible_on(columns, all, r, width)) continue;

        std::optional<FiniteSeq> found;
        for (std::size_t extra = 0; extra <= static_cast<std::size_t>(J) && !found; ++extra) {
            for_each_combination(static_cast<std::size_t>(J), extra, [&](const std::vector<std::size_t>& sub) {
                std::vector<std::size_t> cols = sub;
                cols.push_back(static_cast<std::size_t>(J));
                found = admissible_on(columns, cols, r, width);
                return found.has_value();
            });
        }
        return found;
    }
    return std::nullopt;
}

std::optional<DStarSum> sum_dstar_ext(const GfSeq& u, int max_support) {
    auto base = sum_cauchy_ext(u);
    if (auto* s = std::get_if<CauchySum>(&base)) {
        return DStarSum{s->value, DStarCertificate{basis_e(0), u, s->certificate}};
    }
    auto p = solve_pole_cancellation(u, max_support);
    if (!p) return std::nullopt;
    GfSeq transformed = dstar_with_finite(u, *p);
    auto inner = sum_cauchy_ext(transformed);
    auto& cs = std::get<CauchySum>(inner);
    Rational value = cs.value / p->sum();
    return DStarSum{std::move(value), DStarCertificate{*p, std::move(transformed), cs.certificate}};
}

std::optional<Rational> sum_with_cauchy_certificate(const GfSeq& u, const FiniteSeq& m) {
    if (m.sum().is_zero()) return std::nullopt;
    GfSeq prod = cauchy_product(GfSeq(m), u);
    auto fin = prod.as_finite();
    if (!fin) return std::nullopt;
    return fin->sum() / m.sum();
}

std::optional<Rational> sum_with_dstar_certificate(const GfSeq& u, const FiniteSeq& p) {
    if (p.sum().is_zero()) return std::nullopt;
    auto inner = sum_cauchy_ext(dstar_with_finite(u, p));
    auto* s = std::get_if<CauchySum>(&inner);
    if (!s) return std::nullopt;
    return s->value / p.sum();
}

bool verify_certificate(const GfSeq& u, const CauchyCertificate& c) {
    if (c.m.sum().is_zero()) return false;
    return cauchy_product(GfSeq(c.m), u) == GfSeq(c.product);
}

bool verify_certificate(const GfSeq& u, const DStarCertificate& c) {
    if (c.p.sum().is_zero()) return false;
    if (dstar_with_finite(u, c.p) != c.transformed) return false;
    return verify_certificate(c.transformed, c.inner);
}

bool verify_certificate(const GfSeq& u, const NonMembershipWitness& w) {
    if (!w.m.sum().is_zero() || w.product.sum().is_zero()) return false;
    return cauchy_product(GfSeq(w.m), u) == GfSeq(w.product);
}

Classification classify(const GfSeq& u, int max_support) {
    auto base = sum_cauchy_ext(u);
    if (auto* s = std::get_if<CauchySum>(&base)) {
        if (roots_outside_closed_unit_disk(u.gf().den())) {
            return AbsolutelyConvergent{s->value, s->certificate};
        }
        return CauchyExtSummable{s->value, s->certificate};
    }
    auto& witness = std::get<NonMembershipWitness>(base);
    if (auto d = sum_dstar_ext(u, max_support)) {
        return DStarExtSummable{d->value, d->certificate, witness};
    }
    return NotCauchySummableNoDStarCertFound{witness, max_support, -vanishing_order(u.gf(), kOne)};
}

std::string tier_name(const Classification& c) {
    struct Visitor {
        std::string operator()(const AbsolutelyConvergent&) const { return "absolutely_convergent"; }
        std::string operator()(const CauchyExtSummable&) const { return "cauchy_ext_summable"; }
        std::string operator()(const DStarExtSummable&) const { return "dstar_ext_summable"; }
        std::string operator()(const NotCauchySummableNoDStarCertFound&) const {
            return "not_cauchy_summable_no_dstar_cert_found";
        }
        std::string operator()(const ConvergenceUndetermined&) const { return "convergence_undetermined"; }
    };
    return std::visit(Visitor{}, c);
}

std::optional<Rational> sum_value(const Classification& c) {
    struct Visitor {
        std::optional<Rational> operator()(const AbsolutelyConvergent& v) const { return v.value; }
        std::optional<Rational> operator()(const CauchyExtSummable& v) const { return v.value; }
        std::optional<Rational> operator()(const DStarExtSummable& v) const { return v.value; }
        std::optional<Rational> operator()(const NotCauchySummableNoDStarCertFound&) const { return std::nullopt; }
        std::optional<Rational> operator()(const ConvergenceUndetermined& v) const { return v.value; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace divisum
