#include <doctest.h>

#include "divisum/expr.hpp"
#include "support/ast_gen.hpp"

using namespace divisum;
using divisum::testing::Gen;

namespace {

GfSeq elab(std::string_view text) {
    return std::get<GfSeq>(elaborate(*parse(text)));
}

}  // namespace

TEST_CASE("parse builds the expected trees") {
    auto e = parse("P(1) os (e(0) - 4*e(1))");
    auto want = Expr::binary(
        ExprKind::DStar, Expr::atom(ExprKind::P, 1),
        Expr::binary(ExprKind::Sub, Expr::atom(ExprKind::E, 0),
                     Expr::binary(ExprKind::Mul, Expr::literal(4), Expr::atom(ExprKind::E, 1))));
    CHECK(structurally_equal(*e, *want));
    CHECK(e->span.begin == 0);
    CHECK(e->span.end == 23);
    CHECK(e->rhs->span.begin == 8);  // parentheses belong to the operand span

    auto g = parse("G(-1) ox G(-1)");
    CHECK(g->kind == ExprKind::Mul);
    CHECK(g->lhs->kind == ExprKind::G);
    CHECK(g->lhs->value == Rational(-1));

    CHECK(structurally_equal(*parse("G(-1) \xE2\x8A\x97 G(-1)"), *g));
    CHECK(structurally_equal(*parse("P(1) \xE2\x8A\x9B e(1)"), *parse("P(1) os e(1)")));
    CHECK(structurally_equal(*parse("G(-1) * G(-1)"), *g));

    CHECK(parse("1/2")->value == Rational(1, 2));
    CHECK(parse("G(3/6)")->value == Rational(1, 2));
    CHECK(parse("AP(2)")->kind == ExprKind::AP);
    CHECK(parse("T(3)")->index == 3);
    CHECK(parse("H")->kind == ExprKind::H);
}

TEST_CASE("operators are left-associative with two precedence levels") {
    auto e = parse("P(0) - P(1) + e(2)");
    CHECK(e->kind == ExprKind::Add);
    CHECK(e->lhs->kind == ExprKind::Sub);

    auto m = parse("e(1) ox e(2) os e(1)");
    CHECK(m->kind == ExprKind::DStar);
    CHECK(m->lhs->kind == ExprKind::Mul);

    auto p = parse("P(0) + 2*P(1)");
    CHECK(p->kind == ExprKind::Add);
    CHECK(p->rhs->kind == ExprKind::Mul);

    auto n = parse("-P(1) * e(1)");
    CHECK(n->kind == ExprKind::Mul);
    CHECK(n->lhs->kind == ExprKind::Neg);
}

TEST_CASE("parse errors report position and expectations") {
    try {
        parse("P(1");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.position() == 3);
        CHECK(err.expected() == std::vector<std::string>{")"});
    }
    auto position_of = [](std::string_view text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& err) {
            return err.position();
        }
        return std::size_t(-1);
    };
    CHECK(position_of("") == 0);
    CHECK(position_of("P(1) +") == 6);
    CHECK(position_of("P(1) P(2)") == 5);
    CHECK(position_of("Q(1)") == 0);
    CHECK(position_of("P(x)") == 2);
    CHECK(position_of("G(1/0)") == 4);
    CHECK(position_of("e(1) $ e(2)") == 5);
    CHECK(position_of("\xE2\x8A\x97 #") == 0);
    CHECK(position_of("e(0) \xE2\x8A\x97 #") == 7);  // code points, not bytes
    CHECK(position_of("P(99999999999)") == 2);
}

TEST_CASE("pretty printing") {
    CHECK(pretty(*parse("P(1) os (e(0) - 4*e(1))")) == "P(1) os (e(0) - 4*e(1))");
    CHECK(pretty(*Expr::neg(Expr::geometric(-1))) == "-G(-1)");
    CHECK(pretty(*parse("(P(0) + P(1)) + (P(2) + P(3))")) == "P(0) + P(1) + (P(2) + P(3))");
    CHECK(pretty(*parse("((e(1)))")) == "e(1)");
    CHECK(pretty(*parse("-(P(1) - P(0))")) == "-(P(1) - P(0))");
    CHECK(pretty(*parse("G(-1) ox G(-1)")) == "G(-1) ox G(-1)");
    CHECK(pretty(*parse("1/2 * P(1)")) == "1/2*P(1)");
    CHECK(pretty(*parse("e(1) * -e(2)")) == "e(1) ox -e(2)");
}

TEST_CASE("round trip on random trees (depth <= 6)") {
    Gen gen(4242);
    for (int i = 0; i < 500; ++i) {
        ExprPtr e = divisum::testing::random_expr(gen, 6);
        std::string text = pretty(*e);
        ExprPtr back = parse(text);
        CHECK_MESSAGE(structurally_equal(*e, *back), text);
    }
}

TEST_CASE("elaboration") {
    CHECK(elab("P(1) - P(0)").gf() == RatFun(Poly::x(), Poly{1, -2, 1}));
    CHECK(terms(elab("2*P(1) - P(0)"), 5) == std::vector<Rational>{1, 3, 5, 7, 9});
    CHECK(elab("P(1) os (e(0) - 4*e(1))") == make_AP(1));
    CHECK(elab("G(-1) ox G(-1)") == make_T(1));
    CHECK(elab("3") == GfSeq(FiniteSeq{3}));
    CHECK(elab("-G(-1)") == Rational(-1) * make_geometric(-1));

    auto demo = elaborate(*parse("H os (e(0) - e(1))"));
    REQUIRE(std::holds_alternative<HarmonicMarked>(demo));
    CHECK(std::get<HarmonicMarked>(demo).p == basis_e(0) - basis_e(1));
}

TEST_CASE("elaboration errors") {
    auto kind_of = [](std::string_view text) {
        try {
            elaborate(*parse(text));
        } catch (const ElaborationError& err) {
            return err.kind();
        }
        FAIL("expected an elaboration error");
        return ElaborationError::Kind::InvalidArgument;
    };
    CHECK(kind_of("H") == ElaborationError::Kind::NotInClass);
    CHECK(kind_of("H os e(1)") == ElaborationError::Kind::NotInClass);
    CHECK(kind_of("2 * (H os (e(0) - e(1)))") == ElaborationError::Kind::NotInClass);
    CHECK(kind_of("P(1) os P(0)") == ElaborationError::Kind::DStarNonFinite);

    try {
        elaborate(*parse("e(0) + H"));
    } catch (const ElaborationError& err) {
        CHECK(err.span().begin == 7);
        CHECK(err.span().end == 8);
    }
    try {
        elaborate(*parse("P(1) os (P(0))"));
    } catch (const ElaborationError& err) {
        CHECK(err.span().begin == 8);
        CHECK(err.span().end == 14);
    }
    CHECK_THROWS_AS(elaborate(*Expr::atom(ExprKind::P, -1)), ElaborationError);
}

TEST_CASE("elaboration is a homomorphism into seq-core") {
    Gen gen(777);
    for (int i = 0; i < 300; ++i) {
        ExprPtr e = divisum::testing::random_expr(gen, 4, true);
        CHECK_MESSAGE(std::get<GfSeq>(elaborate(*e)) == divisum::testing::direct_elaboration(*e), pretty(*e));
    }
}
