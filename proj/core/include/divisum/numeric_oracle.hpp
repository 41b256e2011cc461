#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "divisum/rational.hpp"
#include "divisum/sequence.hpp"

namespace divisum {

class PoleAtOne : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct AbelEstimate {
    double value = 0.0;
    std::vector<double> points_used;  // strictly increasing, in (0, 1)
    int terms_per_point = 0;
};

/// Floating-point Abel evaluation: partial sums of sum_k u_k x^k at
/// x = 1 - 2^-4, ..., 1 - 2^-10, Richardson-extrapolated to x -> 1.
///
/// Meaningful when the power series converges on [0, 1), i.e. no root of the
/// gf denominator lies strictly inside the unit disk. Throws PoleAtOne when the
/// gf has a pole at 1 and std::invalid_argument when n_terms < 64.
AbelEstimate abel_estimate(const GfSeq& u, int n_terms);

/// First n terms of H ⊛ (e0 - e1), computed from the divisor-sum definition
/// of ⊛ with H = (1/(k+1)).
std::vector<Rational> harmonic_dstar_terms(int n);

/// Limit of the partial sums of an alternating series by repeated averaging of
/// consecutive partial sums.
double averaged_partial_sums(std::span<const double> terms);

/// Estimate of Σ(H ⊛ (e0 - e1)), which is ln 2.
double harmonic_demo();

}  // namespace divisum
