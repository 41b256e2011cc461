#include "divisum/engine.hpp"

namespace divisum {

namespace {

DerivationStep cauchy_step(const GfSeq& u, const CauchyCertificate& c) {
    DerivationStep s;
    s.kind = StepKind::Cauchy;
    s.operand = u;
    s.factor = c.m;
    s.result = GfSeq(c.product);
    s.factor_sum = c.m.sum();
    s.result_sum = c.product.sum();
    s.value = s.result_sum / s.factor_sum;
    return s;
}

}  // namespace

std::string DerivationStep::to_string() const {
    std::string identity;
    if (kind == StepKind::Cauchy) {
        identity = "(" + factor.to_string() + ") ox [" + operand.gf().to_string() + "] = " +
                   result.as_finite().value_or(FiniteSeq()).to_string();
    } else {
        identity = "[" + operand.gf().to_string() + "] os (" + factor.to_string() + ") = [" +
                   result.gf().to_string() + "]";
    }
    return identity + ", so sum = " + result_sum.to_string() + " / " + factor_sum.to_string() + " = " +
           value.to_string();
}

Derivation explain(const GfSeq& u, int max_support) {
    auto d = sum_dstar_ext(u, max_support);
    if (!d) {
        throw NotSummable("no certificate within support " + std::to_string(max_support) + " for " +
                          u.gf().to_string());
    }
    Derivation out;
    const auto& cert = d->certificate;
    if (cert.p == basis_e(0)) {
        out.steps.push_back(cauchy_step(u, cert.inner));
        return out;
    }
    DerivationStep inner = cauchy_step(cert.transformed, cert.inner);
    DerivationStep outer;
    outer.kind = StepKind::DStar;
    outer.operand = u;
    outer.factor = cert.p;
    outer.result = cert.transformed;
    outer.factor_sum = cert.p.sum();
    outer.result_sum = inner.value;
    outer.value = outer.result_sum / outer.factor_sum;
    out.steps.push_back(std::move(inner));
    out.steps.push_back(std::move(outer));
    return out;
}

bool replay_step(const DerivationStep& s) {
    if (s.factor_sum != s.factor.sum() || s.factor_sum.is_zero()) return false;
    if (s.value != s.result_sum / s.factor_sum) return false;
    if (s.kind == StepKind::Cauchy) {
        auto fin = s.result.as_finite();
        if (!fin || fin->sum() != s.result_sum) return false;
        return cauchy_product(GfSeq(s.factor), s.operand) == s.result;
    }
    return dstar_with_finite(s.operand, s.factor) == s.result;
}

bool replay(const GfSeq& u, const Derivation& d) {
    if (d.steps.empty() || !(d.steps.back().operand == u)) return false;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
        const auto& s = d.steps[i];
        if (!replay_step(s)) return false;
        if (s.kind == StepKind::DStar) {
            // The transformed sequence must have been summed by the previous step.
            if (i == 0) return false;
            const auto& prev = d.steps[i - 1];
            if (!(prev.operand == s.result) || prev.value != s.result_sum) return false;
        }
    }
    return true;
}

}  // namespace divisum
