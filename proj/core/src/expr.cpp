#include "divisum/expr.hpp"

#include <climits>
#include <stdexcept>

namespace divisum {

// ---------------------------------------------------------------------------
// Nodes

ExprPtr Expr::atom(ExprKind kind, int index, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->index = index;
    e->span = span;
    return e;
}

ExprPtr Expr::geometric(Rational alpha, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::G;
    e->value = std::move(alpha);
    e->span = span;
    return e;
}

ExprPtr Expr::literal(Rational value, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Literal;
    e->value = std::move(value);
    e->span = span;
    return e;
}

ExprPtr Expr::harmonic(SourceSpan span) {
    return atom(ExprKind::H, 0, span);
}

ExprPtr Expr::neg(ExprPtr operand, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Neg;
    e->lhs = std::move(operand);
    e->span = span;
    return e;
}

ExprPtr Expr::binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs, SourceSpan span) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    e->span = span;
    return e;
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.index != b.index || a.value != b.value) return false;
    if (static_cast<bool>(a.lhs) != static_cast<bool>(b.lhs)) return false;
    if (static_cast<bool>(a.rhs) != static_cast<bool>(b.rhs)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected, const std::string& message)
    : std::runtime_error(message), position_(position), expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Int, Slash, LParen, RParen, Plus, Minus, Star, Ox, Os, Ident, Invalid, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t pos = 0;  // code point offset
    std::size_t end = 0;
};

std::string describe(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    if (t.kind == Tok::Invalid) return "character '" + t.text + "'";
    return "'" + t.text + "'";
}

std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t cp = 0;
    auto push = [&](Tok k, std::string text, std::size_t bytes) {
        out.push_back(Token{k, std::move(text), cp, cp + 1});
        i += bytes;
        ++cp;
    };
    while (i < src.size()) {
        const unsigned char c = static_cast<unsigned char>(src[i]);
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            ++i;
            ++cp;
            continue;
        }
        if (c >= '0' && c <= '9') {
            std::size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            const std::size_t n = j - i;
            out.push_back(Token{Tok::Int, std::string(src.substr(i, n)), cp, cp + n});
            i = j;
            cp += n;
            continue;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
            std::size_t j = i;
            while (j < src.size() && ((src[j] >= 'a' && src[j] <= 'z') || (src[j] >= 'A' && src[j] <= 'Z'))) ++j;
            const std::size_t n = j - i;
            std::string word(src.substr(i, n));
            Tok k = word == "ox" ? Tok::Ox : word == "os" ? Tok::Os : Tok::Ident;
            out.push_back(Token{k, std::move(word), cp, cp + n});
            i = j;
            cp += n;
            continue;
        }
        switch (c) {
            case '/': push(Tok::Slash, "/", 1); continue;
            case '(': push(Tok::LParen, "(", 1); continue;
            case ')': push(Tok::RParen, ")", 1); continue;
            case '+': push(Tok::Plus, "+", 1); continue;
            case '-': push(Tok::Minus, "-", 1); continue;
            case '*': push(Tok::Star, "*", 1); continue;
            default: break;
        }
        // U+2297 CIRCLED TIMES, U+229B CIRCLED ASTERISK OPERATOR
        if (src.substr(i, 3) == "\xE2\x8A\x97") {
            push(Tok::Ox, "\xE2\x8A\x97", 3);
            continue;
        }
        if (src.substr(i, 3) == "\xE2\x8A\x9B") {
            push(Tok::Os, "\xE2\x8A\x9B", 3);
            continue;
        }
        // Lexing stops here; the parser reports the character if it gets this far.
        std::size_t len = 1;
        if (c >= 0xF0) len = 4;
        else if (c >= 0xE0) len = 3;
        else if (c >= 0xC0) len = 2;
        push(Tok::Invalid, std::string(src.substr(i, len)), len);
        break;
    }
    out.push_back(Token{Tok::End, "", cp, cp});
    return out;
}

const std::vector<std::string> kAtomStart = {"number", "P(", "AP(", "T(", "G(", "e(", "H", "(", "-"};

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (peek().kind != Tok::End) {
            fail({"operator", "end of input"}, "unexpected " + describe(peek()));
        }
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& take() { return toks_[pos_++]; }

    [[noreturn]] void fail(std::vector<std::string> expected, const std::string& what) const {
        std::string msg = what + " at " + std::to_string(peek().pos);
        if (!expected.empty()) {
            msg += ", expected ";
            for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i) msg += i + 1 == expected.size() ? " or " : ", ";
                msg += "'" + expected[i] + "'";
            }
        }
        throw ParseError(peek().pos, std::move(expected), msg);
    }

    const Token& expect(Tok kind, const std::string& text) {
        if (peek().kind != kind) fail({text}, "unexpected " + describe(peek()));
        return take();
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            ExprKind k = take().kind == Tok::Plus ? ExprKind::Add : ExprKind::Sub;
            ExprPtr rhs = term();
            SourceSpan span{lhs->span.begin, rhs->span.end};
            lhs = Expr::binary(k, lhs, rhs, span);
        }
        return lhs;
    }

    ExprPtr term() {
        ExprPtr lhs = unary();
        while (peek().kind == Tok::Star || peek().kind == Tok::Ox || peek().kind == Tok::Os) {
            ExprKind k = take().kind == Tok::Os ? ExprKind::DStar : ExprKind::Mul;
            ExprPtr rhs = unary();
            SourceSpan span{lhs->span.begin, rhs->span.end};
            lhs = Expr::binary(k, lhs, rhs, span);
        }
        return lhs;
    }

    ExprPtr unary() {
        if (peek().kind == Tok::Minus) {
            std::size_t start = take().pos;
            ExprPtr operand = unary();
            return Expr::neg(operand, SourceSpan{start, operand->span.end});
        }
        return atom();
    }

    int integer_arg() {
        const Token& t = expect(Tok::Int, "integer");
        BigInt v = BigInt::parse(t.text);
        if (v > BigInt(INT_MAX)) {
            throw ParseError(t.pos, {}, "integer argument too large at " + std::to_string(t.pos));
        }
        return static_cast<int>(v.to_long());
    }

    Rational rational() {
        const Token& t = expect(Tok::Int, "number");
        BigInt num = BigInt::parse(t.text);
        if (peek().kind != Tok::Slash) return Rational(num);
        take();
        const Token& d = expect(Tok::Int, "number");
        BigInt den = BigInt::parse(d.text);
        if (den.is_zero()) throw ParseError(d.pos, {}, "zero denominator at " + std::to_string(d.pos));
        return Rational(num, den);
    }

    ExprPtr atom() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                std::size_t start = t.pos;
                Rational q = rational();
                return Expr::literal(q, SourceSpan{start, toks_[pos_ - 1].end});
            }
            case Tok::LParen: {
                std::size_t start = take().pos;
                ExprPtr inner = expr();
                std::size_t end = expect(Tok::RParen, ")").end;
                auto widened = std::make_shared<Expr>(*inner);
                widened->span = SourceSpan{start, end};
                return widened;
            }
            case Tok::Ident: break;
            default: fail(kAtomStart, "unexpected " + describe(t));
        }

        const std::string name = t.text;
        const std::size_t start = t.pos;
        take();
        if (name == "H") return Expr::harmonic(SourceSpan{start, start + 1});

        ExprKind kind;
        if (name == "P") kind = ExprKind::P;
        else if (name == "AP") kind = ExprKind::AP;
        else if (name == "T") kind = ExprKind::T;
        else if (name == "G") kind = ExprKind::G;
        else if (name == "e") kind = ExprKind::E;
        else throw ParseError(start, kAtomStart, "unknown name '" + name + "' at " + std::to_string(start));

        expect(Tok::LParen, "(");
        ExprPtr out;
        if (kind == ExprKind::G) {
            bool negative = false;
            if (peek().kind == Tok::Minus) {
                take();
                negative = true;
            }
            Rational q = rational();
            out = Expr::geometric(negative ? -q : q);
        } else {
            out = Expr::atom(kind, integer_arg());
        }
        std::size_t end = expect(Tok::RParen, ")").end;
        auto node = std::make_shared<Expr>(*out);
        node->span = SourceSpan{start, end};
        return node;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

int precedence(const Expr& e) {
    switch (e.kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::DStar: return 2;
        case ExprKind::Neg: return 3;
        default: return 4;
    }
}

void print(const Expr& e, int min_prec, std::string& out) {
    const bool wrap = precedence(e) < min_prec;
    if (wrap) out += "(";
    switch (e.kind) {
        case ExprKind::P: out += "P(" + std::to_string(e.index) + ")"; break;
        case ExprKind::AP: out += "AP(" + std::to_string(e.index) + ")"; break;
        case ExprKind::T: out += "T(" + std::to_string(e.index) + ")"; break;
        case ExprKind::E: out += "e(" + std::to_string(e.index) + ")"; break;
        case ExprKind::G: out += "G(" + e.value.to_string() + ")"; break;
        case ExprKind::H: out += "H"; break;
        case ExprKind::Literal: out += e.value.to_string(); break;
        case ExprKind::Neg:
            out += "-";
            print(*e.lhs, 3, out);
            break;
        case ExprKind::Add:
        case ExprKind::Sub:
            print(*e.lhs, 1, out);
            out += e.kind == ExprKind::Add ? " + " : " - ";
            print(*e.rhs, 2, out);
            break;
        case ExprKind::Mul:
        case ExprKind::DStar: {
            print(*e.lhs, 2, out);
            if (e.kind == ExprKind::DStar) out += " os ";
            else out += e.lhs->kind == ExprKind::Literal ? "*" : " ox ";
            print(*e.rhs, 3, out);
            break;
        }
    }
    if (wrap) out += ")";
}

bool contains_harmonic(const Expr& e) {
    if (e.kind == ExprKind::H) return true;
    return (e.lhs && contains_harmonic(*e.lhs)) || (e.rhs && contains_harmonic(*e.rhs));
}

const Expr* find_harmonic(const Expr& e) {
    if (e.kind == ExprKind::H) return &e;
    if (e.lhs) {
        if (const Expr* h = find_harmonic(*e.lhs)) return h;
    }
    if (e.rhs) return find_harmonic(*e.rhs);
    return nullptr;
}

GfSeq elaborate_gf(const Expr& e) {
    switch (e.kind) {
        case ExprKind::P: return make_P(e.index);
        case ExprKind::AP: return make_AP(e.index);
        case ExprKind::T: return make_T(e.index);
        case ExprKind::E: return basis_e(e.index);
        case ExprKind::G: return make_geometric(e.value);
        case ExprKind::Literal: return GfSeq(FiniteSeq({e.value}));
        case ExprKind::H:
            throw ElaborationError(ElaborationError::Kind::NotInClass, e.span,
                                   "H has no rational generating function; only H os (e(0) - e(1)) is admitted");
        case ExprKind::Neg: return -elaborate_gf(*e.lhs);
        case ExprKind::Add: return elaborate_gf(*e.lhs) + elaborate_gf(*e.rhs);
        case ExprKind::Sub: return elaborate_gf(*e.lhs) - elaborate_gf(*e.rhs);
        case ExprKind::Mul: return cauchy_product(elaborate_gf(*e.lhs), elaborate_gf(*e.rhs));
        case ExprKind::DStar: {
            GfSeq lhs = elaborate_gf(*e.lhs);
            GfSeq rhs = elaborate_gf(*e.rhs);
            auto fin = rhs.as_finite();
            if (!fin) {
                throw ElaborationError(ElaborationError::Kind::DStarNonFinite, e.rhs->span,
                                       "right operand of 'os' must be a finite sequence");
            }
            return dstar_with_finite(lhs, *fin);
        }
    }
    throw std::logic_error("unknown expression kind");
}

}  // namespace

ExprPtr parse(std::string_view text) {
    return Parser(lex(text)).parse_all();
}

std::string pretty(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

Elaborated elaborate(const Expr& e) {
    if (contains_harmonic(e)) {
        if (e.kind == ExprKind::DStar && e.lhs->kind == ExprKind::H && !contains_harmonic(*e.rhs)) {
            auto fin = elaborate_gf(*e.rhs).as_finite();
            if (fin && *fin == basis_e(0) - basis_e(1)) return HarmonicMarked{*fin};
        }
        throw ElaborationError(ElaborationError::Kind::NotInClass, find_harmonic(e)->span,
                               "H has no rational generating function; only H os (e(0) - e(1)) is admitted");
    }
    try {
        return elaborate_gf(e);
    } catch (const ElaborationError&) {
        throw;
    } catch (const std::invalid_argument& ex) {
        throw ElaborationError(ElaborationError::Kind::InvalidArgument, e.span, ex.what());
    }
}

}  // namespace divisum
