#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divisum/rational.hpp"
#include "divisum/sequence.hpp"

namespace divisum {

/// Half-open range of 0-based character (code point) offsets into the source.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class ExprKind {
    P,        // P(n)
    AP,       // AP(n)
    T,        // T(n)
    G,        // G(q)
    E,        // e(k)
    H,        // harmonic sequence
    Literal,  // q, standing for q*e0
    Neg,
    Add,
    Sub,
    Mul,      // '*' / 'ox' / '⊗'
    DStar,    // 'os' / '⊛'
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Series expression tree. Parentheses are not kept as nodes: a parenthesized
/// subexpression's span covers its parentheses.
struct Expr {
    ExprKind kind = ExprKind::Literal;
    int index = 0;    // P, AP, T, E
    Rational value;   // G parameter or literal value (literals are >= 0)
    ExprPtr lhs;      // Neg operand, or left operand
    ExprPtr rhs;
    SourceSpan span;

    static ExprPtr atom(ExprKind kind, int index, SourceSpan span = {});
    static ExprPtr geometric(Rational alpha, SourceSpan span = {});
    static ExprPtr literal(Rational value, SourceSpan span = {});
    static ExprPtr harmonic(SourceSpan span = {});
    static ExprPtr neg(ExprPtr operand, SourceSpan span = {});
    static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, SourceSpan span = {});
};

/// Structural equality; spans are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& message);

    std::size_t position() const { return position_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

/// Parses the series grammar:
///   expr  := term (('+'|'-') term)*
///   term  := unary (('*'|'ox'|'os') unary)*
///   unary := '-' unary | atom
///   atom  := RAT | 'P(' INT ')' | 'AP(' INT ')' | 'T(' INT ')' | 'G(' ['-'] RAT ')'
///          | 'e(' INT ')' | 'H' | '(' expr ')'
///   RAT   := INT ('/' INT)?
/// '⊗' and '⊛' are accepted for 'ox' and 'os'.
ExprPtr parse(std::string_view text);

/// Inverse of parse up to structure, with parentheses only where needed.
std::string pretty(const Expr& e);

/// Marker for the one admitted use of H: H ⊛ (e0 - e1).
struct HarmonicMarked {
    FiniteSeq p;
};

using Elaborated = std::variant<GfSeq, HarmonicMarked>;

class ElaborationError : public std::runtime_error {
public:
    enum class Kind { NotInClass, DStarNonFinite, InvalidArgument };

    ElaborationError(Kind kind, SourceSpan span, const std::string& message)
        : std::runtime_error(message), kind_(kind), span_(span) {}

    Kind kind() const { return kind_; }
    SourceSpan span() const { return span_; }

private:
    Kind kind_;
    SourceSpan span_;
};

Elaborated elaborate(const Expr& e);

}  // namespace divisum
