#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "divisum/rational.hpp"
#include "divisum/sequence.hpp"

namespace divisum {

inline constexpr int kDefaultMaxSupport = 8;

/// m ⊗ u = product with m finite and Σ(m) != 0; then Σ(u) = Σ(product) / Σ(m).
struct CauchyCertificate {
    FiniteSeq m;
    FiniteSeq product;

    friend bool operator==(const CauchyCertificate&, const CauchyCertificate&) = default;
};

/// u ⊛ p = transformed with Σ(p) != 0, and `inner` sums `transformed`;
/// then Σ(u) = Σ(transformed) / Σ(p).
struct DStarCertificate {
    FiniteSeq p;
    GfSeq transformed;
    CauchyCertificate inner;

    friend bool operator==(const DStarCertificate&, const DStarCertificate&) = default;
};

/// m ⊗ u = product with Σ(m) = 0 and Σ(product) != 0, which rules u out of
/// the ⊗-extension: any valid certificate n would give
/// 0 = Σ(m) Σ(n ⊗ u) = Σ(n) Σ(product) != 0.
struct NonMembershipWitness {
    FiniteSeq m;
    FiniteSeq product;

    friend bool operator==(const NonMembershipWitness&, const NonMembershipWitness&) = default;
};

struct CauchySum {
    Rational value;
    CauchyCertificate certificate;
};

struct DStarSum {
    Rational value;
    DStarCertificate certificate;
};

/// Decides ⊗-extension membership from the pole of the reduced gf at 1.
/// Certificates are the gf denominator scaled to constant term 1.
std::variant<CauchySum, NonMembershipWitness> sum_cauchy_ext(const GfSeq& u);

/// Finite p with Σ(p) != 0 such that u ⊛ p has no pole at 1.
///
/// Requires a pole of u at 1 (throws std::invalid_argument otherwise). Searches
/// supports ordered by largest index, then size, then lexicographically, up to
/// index max_support, by solving the homogeneous system on the principal parts
/// of x^j U(x^(j+1)) at x = 1. The first nonzero coefficient of the result is 1.
/// std::nullopt means "nothing within the bound", not non-membership.
std::optional<FiniteSeq> solve_pole_cancellation(const GfSeq& u, int max_support);

/// Σ at the ⊛ tier; a ⊗-summable u gets the trivial p = e0.
std::optional<DStarSum> sum_dstar_ext(const GfSeq& u, int max_support = kDefaultMaxSupport);

/// Σ(m ⊗ u) / Σ(m) if m is a valid ⊗ certificate for u.
std::optional<Rational> sum_with_cauchy_certificate(const GfSeq& u, const FiniteSeq& m);
/// Σ(u ⊛ p) / Σ(p) if p is a valid ⊛ certificate for u.
std::optional<Rational> sum_with_dstar_certificate(const GfSeq& u, const FiniteSeq& p);

bool verify_certificate(const GfSeq& u, const CauchyCertificate& c);
bool verify_certificate(const GfSeq& u, const DStarCertificate& c);
bool verify_certificate(const GfSeq& u, const NonMembershipWitness& w);

struct AbsolutelyConvergent {
    Rational value;
    CauchyCertificate certificate;
};

struct CauchyExtSummable {
    Rational value;
    CauchyCertificate certificate;
};

struct DStarExtSummable {
    Rational value;
    DStarCertificate certificate;
    NonMembershipWitness cauchy_witness;
};

struct NotCauchySummableNoDStarCertFound {
    NonMembershipWitness witness;
    int searched_support = 0;
    int pole_order = 0;
};

/// Reserved for an inconclusive convergence test. The exact Schur–Cohn test
/// used by classify() is complete for rational coefficients, so classify()
/// does not currently produce it.
struct ConvergenceUndetermined {
    std::optional<Rational> value;
};

using Classification = std::variant<AbsolutelyConvergent, CauchyExtSummable, DStarExtSummable,
                                    NotCauchySummableNoDStarCertFound, ConvergenceUndetermined>;

/// Strongest applicable tier. AbsolutelyConvergent iff every root of the
/// reduced denominator lies strictly outside the closed unit disk.
Classification classify(const GfSeq& u, int max_support = kDefaultMaxSupport);

/// Stable tier name, e.g. "dstar_ext_summable".
std::string tier_name(const Classification& c);
std::optional<Rational> sum_value(const Classification& c);

// ---------------------------------------------------------------------------
// Derivations

enum class StepKind { Cauchy, DStar };

/// One identity of a derivation.
///   Cauchy: factor ⊗ operand = result (finite), Σ(operand) = Σ(result) / Σ(factor)
///   DStar:  operand ⊛ factor = result,          Σ(operand) = Σ(result) / Σ(factor)
struct DerivationStep {
    StepKind kind = StepKind::Cauchy;
    GfSeq operand;
    FiniteSeq factor;
    GfSeq result;
    Rational factor_sum;
    Rational result_sum;
    Rational value;

    std::string to_string() const;
};

struct Derivation {
    std::vector<DerivationStep> steps;

    const Rational& value() const { return steps.back().value; }
};

class NotSummable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Derivation of Σ(u): a ⊗ step, preceded for ⊛-tier sequences by the
/// ⊛ step that cancels the pole. Throws NotSummable when no tier applies.
Derivation explain(const GfSeq& u, int max_support = kDefaultMaxSupport);

/// Re-checks every identity and quotient of d and that it concludes about u.
bool replay(const GfSeq& u, const Derivation& d);
/// Re-checks a single step in isolation.
bool replay_step(const DerivationStep& step);

}  // namespace divisum
