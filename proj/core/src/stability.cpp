#include "divisum/stability.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace divisum {

bool schur_stable(const Poly& p) {
    if (p.is_zero()) return false;
    std::vector<Rational> a(p.coeffs().begin(), p.coeffs().end());
    // Each round: require |a_0| < |a_n|, then replace p by
    // (a_n p(z) - a_0 z^n p(1/z)) / z, which has one fewer root inside the
    // disk and exactly degree n - 1. |a_0| >= |a_n| already forces a root
    // with |z| >= 1 because the product of the roots is a_0 / a_n in modulus.
    while (a.size() > 1) {
        const std::size_t n = a.size() - 1;
        const Rational a0 = a.front();
        const Rational an = a.back();
        if (a0.abs() >= an.abs()) return false;
        std::vector<Rational> next(n);
        for (std::size_t k = 1; k <= n; ++k) next[k - 1] = an * a[k] - a0 * a[n - k];
        a = std::move(next);
    }
    return true;
}

bool roots_outside_closed_unit_disk(const Poly& p) {
    if (p.coeff(0).is_zero()) throw std::domain_error("polynomial vanishes at 0");
    std::vector<Rational> rev(p.coeffs().begin(), p.coeffs().end());
    std::reverse(rev.begin(), rev.end());
    return schur_stable(Poly(std::move(rev)));
}

}  // namespace divisum
