#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <CLI11.hpp>
#include <json.hpp>

#include "divisum/engine.hpp"
#include "divisum/expr.hpp"
#include "divisum/numeric_oracle.hpp"
#include "divisum/special_numbers.hpp"

namespace divisum::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;
constexpr int kAbelTerms = 1 << 16;

struct Failure {
    int code;
    std::string message;
};

std::string join(const std::vector<std::string>& lines, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i) out += sep;
        out += lines[i];
    }
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// Marks the offending characters under the input.
std::string underline(const std::string& text, SourceSpan span) {
    std::string out = "  " + text + "\n  ";
    out.append(span.begin, ' ');
    out.append(std::max<std::size_t>(1, span.end > span.begin ? span.end - span.begin : 1), '^');
    return out;
}

struct Loaded {
    std::string text;
    ExprPtr expr;
    Elaborated value;
};

Loaded load(const std::string& text) {
    ExprPtr expr;
    try {
        expr = parse(text);
    } catch (const ParseError& e) {
        throw Failure{kUsageError, std::string("parse error: ") + e.what() + "\n" +
                                       underline(text, {e.position(), e.position() + 1})};
    }
    try {
        return {text, expr, elaborate(*expr)};
    } catch (const ElaborationError& e) {
        int code = e.kind() == ElaborationError::Kind::NotInClass ? kNotInClass : kUsageError;
        std::string tag = e.kind() == ElaborationError::Kind::NotInClass ? "not in class" : "invalid expression";
        throw Failure{code, tag + ": " + e.what() + "\n" + underline(text, e.span())};
    }
}

const GfSeq& require_gf(const Loaded& l, const std::string& command) {
    if (auto* u = std::get_if<GfSeq>(&l.value)) return *u;
    throw Failure{kNotInClass, "not in class: H is only admitted as H os (e(0) - e(1)), and only by `terms` and `abel`, not by `" +
                                   command + "`"};
}

json coeffs_json(const FiniteSeq& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.to_string());
    return a;
}

json gf_json(const GfSeq& u) {
    return {{"num", u.gf().num().to_string()}, {"den", u.gf().den().to_string()}};
}

json cauchy_json(const CauchyCertificate& c) {
    return {{"kind", "cauchy"}, {"m", coeffs_json(c.m)}, {"product", coeffs_json(c.product)}};
}

json witness_json(const NonMembershipWitness& w) {
    return {{"kind", "non_membership"}, {"m", coeffs_json(w.m)}, {"product", coeffs_json(w.product)}};
}

json certificate_json(const Classification& c) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AbsolutelyConvergent> || std::is_same_v<T, CauchyExtSummable>) {
                return cauchy_json(v.certificate);
            } else if constexpr (std::is_same_v<T, DStarExtSummable>) {
                return {{"kind", "dstar"},
                        {"p", coeffs_json(v.certificate.p)},
                        {"transformed", gf_json(v.certificate.transformed)},
                        {"inner", cauchy_json(v.certificate.inner)},
                        {"witness", witness_json(v.cauchy_witness)}};
            } else if constexpr (std::is_same_v<T, NotCauchySummableNoDStarCertFound>) {
                json w = witness_json(v.witness);
                w["searched_support"] = v.searched_support;
                w["pole_order"] = v.pole_order;
                return w;
            } else {
                return nullptr;
            }
        },
        c);
}

json step_json(const DerivationStep& s) {
    return {{"kind", s.kind == StepKind::Cauchy ? "cauchy" : "dstar"},
            {"operand", gf_json(s.operand)},
            {"factor", coeffs_json(s.factor)},
            {"result", gf_json(s.result)},
            {"factor_sum", s.factor_sum.to_string()},
            {"result_sum", s.result_sum.to_string()},
            {"value", s.value.to_string()},
            {"text", s.to_string()}};
}

// Everything the expression subcommands report about a sequence.
struct Report {
    Classification cls;
    std::optional<Derivation> derivation;
    int failure_code = kOk;
};

Report analyse(const GfSeq& u, int max_support) {
    Report r{classify(u, max_support), std::nullopt, kOk};
    if (auto* nc = std::get_if<NotCauchySummableNoDStarCertFound>(&r.cls)) {
        r.failure_code = nc->searched_support < nc->pole_order ? kBoundTooSmall : kNotSummable;
    } else if (sum_value(r.cls)) {
        r.derivation = explain(u, max_support);
        for (const auto& step : r.derivation->steps) {
            if (!replay_step(step)) throw Failure{kInternalError, "internal error: derivation step failed to replay"};
        }
        if (!replay(u, *r.derivation)) throw Failure{kInternalError, "internal error: derivation failed to replay"};
    }
    return r;
}

json report_json(const Loaded& l, const GfSeq& u, const Report& r) {
    json j;
    j["schema"] = kSchema;
    j["expr"] = pretty(*l.expr);
    j["gf"] = gf_json(u);
    j["classification"] = tier_name(r.cls);
    auto value = sum_value(r.cls);
    j["sum"] = value ? json(value->to_string()) : json(nullptr);
    j["certificate"] = certificate_json(r.cls);
    if (r.derivation) {
        json steps = json::array();
        for (const auto& s : r.derivation->steps) steps.push_back(step_json(s));
        j["derivation"] = steps;
    } else {
        j["derivation"] = nullptr;
    }
    return j;
}

std::string not_summable_message(const Classification& c) {
    const auto& nc = std::get<NotCauchySummableNoDStarCertFound>(c);
    std::string msg = "not summable: (" + nc.witness.m.to_string() + ") ox u = " + nc.witness.product.to_string() +
                      " with sum(m) = 0 rules out the Cauchy tier; ";
    if (nc.searched_support < nc.pole_order) {
        msg += "no dstar certificate with support <= " + std::to_string(nc.searched_support) + " (pole order " +
               std::to_string(nc.pole_order) + "; try a larger --max-support)";
    } else {
        msg += "every pole-cancelling p with support <= " + std::to_string(nc.searched_support) + " has sum(p) = 0";
    }
    return msg;
}

std::string classification_text(const Classification& c) {
    std::vector<std::string> lines{tier_name(c)};
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AbsolutelyConvergent> || std::is_same_v<T, CauchyExtSummable>) {
                lines.push_back("sum: " + v.value.to_string());
                lines.push_back("certificate: m = " + v.certificate.m.to_string() +
                                ", product = " + v.certificate.product.to_string());
            } else if constexpr (std::is_same_v<T, DStarExtSummable>) {
                lines.push_back("sum: " + v.value.to_string());
                lines.push_back("certificate: p = " + v.certificate.p.to_string() +
                                ", m = " + v.certificate.inner.m.to_string());
                lines.push_back("witness: m = " + v.cauchy_witness.m.to_string() +
                                ", product = " + v.cauchy_witness.product.to_string());
            } else if constexpr (std::is_same_v<T, NotCauchySummableNoDStarCertFound>) {
                lines.push_back("witness: m = " + v.witness.m.to_string() + ", product = " + v.witness.product.to_string());
                lines.push_back("searched support: " + std::to_string(v.searched_support));
                lines.push_back("pole order: " + std::to_string(v.pole_order));
            } else {
                if (v.value) lines.push_back("sum: " + v.value->to_string());
            }
        },
        c);
    return join(lines, "\n");
}

struct Options {
    bool json = false;
    int max_support = kDefaultMaxSupport;
};

CliOutput cmd_expression(const std::string& command, const std::string& text, const Options& opt) {
    Loaded l = load(text);
    const GfSeq& u = require_gf(l, command);
    Report r = analyse(u, opt.max_support);
    CliOutput out;
    if (opt.json) {
        out.out = report_json(l, u, r).dump(2);
        if (r.failure_code != kOk && command != "classify" && command != "gf") {
            out.exit_code = r.failure_code;
            out.err = not_summable_message(r.cls);
        }
        return out;
    }
    if (command == "gf") {
        out.out = u.gf().to_string();
    } else if (command == "classify") {
        out.out = classification_text(r.cls);
    } else if (r.failure_code != kOk) {
        out.exit_code = r.failure_code;
        out.err = not_summable_message(r.cls);
    } else if (command == "sum") {
        out.out = sum_value(r.cls)->to_string();
    } else {
        std::vector<std::string> lines;
        for (std::size_t i = 0; i < r.derivation->steps.size(); ++i) {
            lines.push_back(std::to_string(i + 1) + ". " + r.derivation->steps[i].to_string());
        }
        lines.push_back("sum: " + r.derivation->value().to_string());
        out.out = join(lines, "\n");
    }
    return out;
}

CliOutput cmd_terms(const std::string& text, int n, const Options& opt) {
    if (n < 0) throw Failure{kUsageError, "terms: -n must be non-negative"};
    Loaded l = load(text);
    std::vector<Rational> ts;
    if (auto* u = std::get_if<GfSeq>(&l.value)) {
        ts = terms(*u, n);
    } else {
        ts = harmonic_dstar_terms(n);
    }
    std::vector<std::string> parts;
    for (const auto& t : ts) parts.push_back(t.to_string());
    CliOutput out;
    if (opt.json) {
        json j{{"schema", kSchema}, {"expr", pretty(*l.expr)}, {"terms", parts}};
        if (auto* u = std::get_if<GfSeq>(&l.value)) j["gf"] = gf_json(*u);
        out.out = j.dump(2);
    } else {
        out.out = join(parts, ", ");
    }
    return out;
}

CliOutput cmd_abel(const std::string& text, int n_terms, const Options& opt) {
    Loaded l = load(text);
    json j{{"schema", kSchema}, {"expr", pretty(*l.expr)}};
    double value = 0.0;
    if (auto* u = std::get_if<GfSeq>(&l.value)) {
        AbelEstimate est;
        try {
            est = abel_estimate(*u, n_terms);
        } catch (const PoleAtOne&) {
            throw Failure{kUsageError, "abel: the generating function has a pole at x = 1, so the Abel limit does not exist"};
        } catch (const std::invalid_argument& e) {
            throw Failure{kUsageError, std::string("abel: ") + e.what()};
        }
        value = est.value;
        j["gf"] = gf_json(*u);
        j["points"] = est.points_used;
        j["terms_per_point"] = est.terms_per_point;
    } else {
        value = harmonic_demo();
    }
    if (!std::isfinite(value)) {
        throw Failure{kUsageError, "abel: estimate diverged; the power series must converge on [0, 1)"};
    }
    CliOutput out;
    if (opt.json) {
        j["estimate"] = value;
        out.out = j.dump(2);
    } else {
        out.out = format_double(value);
    }
    return out;
}

CliOutput cmd_bernoulli(int n, const Options& opt) {
    if (n < 0) throw Failure{kUsageError, "bernoulli: index must be non-negative"};
    Rational b = bernoulli_plus(n);
    CliOutput out;
    out.out = opt.json ? json{{"schema", kSchema}, {"n", n}, {"bernoulli_plus", b.to_string()}}.dump(2) : b.to_string();
    return out;
}

CliOutput cmd_zeta(const std::string& arg, const Options& opt) {
    long s = 0;
    std::size_t used = 0;
    try {
        s = std::stol(arg, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != arg.size() || arg.empty()) throw Failure{kUsageError, "zeta: expected an integer, got '" + arg + "'"};
    if (s > 0) throw Failure{kUsageError, "zeta: only non-positive integers are supported"};
    if (s < -100000) throw Failure{kUsageError, "zeta: argument too large in magnitude"};
    Rational z = zeta_neg(static_cast<int>(-s));
    CliOutput out;
    out.out = opt.json ? json{{"schema", kSchema}, {"s", s}, {"zeta", z.to_string()}}.dump(2) : z.to_string();
    return out;
}

CliOutput cmd_demo_harmonic(const Options& opt) {
    constexpr int kShown = 8;
    std::vector<Rational> ts = harmonic_dstar_terms(kShown);
    std::vector<std::string> parts;
    for (const auto& t : ts) parts.push_back(t.to_string());
    double estimate = harmonic_demo();
    double ln2 = std::log(2.0);
    CliOutput out;
    if (opt.json) {
        out.out = json{{"schema", kSchema},
                       {"expr", "H os (e(0) - e(1))"},
                       {"terms", parts},
                       {"estimate", estimate},
                       {"ln2", ln2},
                       {"in_dstar_extension", false}}
                      .dump(2);
        return out;
    }
    std::vector<std::string> lines{
        "H os (e0 - e1) = " + join(parts, ", ") + ", ...",
        "sum(H os (e0 - e1)) ~ " + format_double(estimate) + " (ln 2 = " + format_double(ln2) + ")",
        "sum(e0 - e1) = 0 while sum(H os (e0 - e1)) != 0, so H is not in the dstar extension"};
    out.out = join(lines, "\n");
    return out;
}

}  // namespace

CliOutput run(const std::vector<std::string>& args) {
    CLI::App app{"Exact sums of divergent series via Cauchy and divisor-indexed products", "divisum"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Print a JSON object instead of plain text");
    app.add_option("--max-support", opt.max_support, "Largest index searched for dstar certificates")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    std::string expr_text;
    int n_terms = 10;
    int abel_terms = kAbelTerms;
    int index = 0;
    std::string zeta_arg;
    std::string demo_name;

    auto* sum = app.add_subcommand("sum", "Sum of the series");
    sum->add_option("expr", expr_text, "Series expression")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Summability tier and certificate");
    classify_cmd->add_option("expr", expr_text, "Series expression")->required();
    auto* terms_cmd = app.add_subcommand("terms", "Leading terms of the sequence");
    terms_cmd->add_option("expr", expr_text, "Series expression")->required();
    terms_cmd->add_option("-n", n_terms, "Number of terms")->capture_default_str();
    auto* gf = app.add_subcommand("gf", "Reduced generating function");
    gf->add_option("expr", expr_text, "Series expression")->required();
    auto* explain_cmd = app.add_subcommand("explain", "Step-by-step derivation of the sum");
    explain_cmd->add_option("expr", expr_text, "Series expression")->required();
    auto* abel = app.add_subcommand("abel", "Floating-point Abel estimate");
    abel->add_option("expr", expr_text, "Series expression")->required();
    abel->add_option("--terms", abel_terms, "Terms per evaluation point")->capture_default_str();
    auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli number B+_n");
    bernoulli->add_option("n", index, "Index")->required();
    auto* zeta = app.add_subcommand("zeta", "zeta(s) at a non-positive integer s");
    zeta->add_option("s", zeta_arg, "Non-positive integer")->required();
    auto* demo = app.add_subcommand("demo", "Demonstrations");
    demo->add_option("name", demo_name, "Demo name")->required()->check(CLI::IsMember({"harmonic"}));

    CliOutput out;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        auto* target = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
        out.out = target->help();
        return out;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        if (app.get_subcommands().empty()) {
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (args[i] == "--max-support") {
                    ++i;
                } else if (args[i].rfind("-", 0) != 0) {
                    if (app.get_subcommand_no_throw(args[i]) == nullptr) what = "unknown subcommand '" + args[i] + "'";
                    break;
                }
            }
        }
        out.exit_code = kUsageError;
        out.err = "error: " + what + "\n\n" + app.help();
        return out;
    }

    try {
        if (sum->parsed()) return cmd_expression("sum", expr_text, opt);
        if (classify_cmd->parsed()) return cmd_expression("classify", expr_text, opt);
        if (gf->parsed()) return cmd_expression("gf", expr_text, opt);
        if (explain_cmd->parsed()) return cmd_expression("explain", expr_text, opt);
        if (terms_cmd->parsed()) return cmd_terms(expr_text, n_terms, opt);
        if (abel->parsed()) return cmd_abel(expr_text, abel_terms, opt);
        if (bernoulli->parsed()) return cmd_bernoulli(index, opt);
        if (zeta->parsed()) return cmd_zeta(zeta_arg, opt);
        if (demo->parsed()) return cmd_demo_harmonic(opt);
    } catch (const Failure& f) {
        out.exit_code = f.code;
        out.err = f.message;
        return out;
    } catch (const std::exception& e) {
        out.exit_code = kInternalError;
        out.err = std::string("internal error: ") + e.what();
        return out;
    }
    out.exit_code = kUsageError;
    out.err = app.help();
    return out;
}

}  // namespace divisum::cli
