#include <gtest/gtest.h>

#include "psci/polyring.hpp"
#include "support.hpp"

using namespace psci;
using namespace psci::testing;

TEST(Parse, MixedRationalPolynomial) {
    const RingSpec r(2, true);
    const Polynomial p = parse_polynomial("3/2*x1^2*z - x2", r);
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p.coeff(Monomial::from_exponents(std::vector<int>{2, 0, 1})), Rational(3, 2));
    EXPECT_EQ(p.coeff(Monomial::variable(1)), Rational(-1));
    EXPECT_EQ(parse_polynomial(p.to_string(), r), p);
}

TEST(Parse, TrailingOperatorReportsColumn) {
    try {
        parse_polynomial("x1 + ", RingSpec(2, false));
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.column(), 6);
        EXPECT_NE(std::string(e.what()).find("column 6"), std::string::npos);
    }
}

TEST(Parse, RejectsJuxtaposition) { EXPECT_THROW(parse_polynomial("2 x1", RingSpec(2, false)), ParseError); }

TEST(Parse, UnknownVariables) {
    const RingSpec r(2, false);
    for (const char* bad : {"z", "x3", "x0", "y", "x01"}) {
        try {
            parse_polynomial(bad, r);
            FAIL() << bad;
        } catch (const ParseError& e) {
            EXPECT_NE(std::string(e.what()).find("unknown variable"), std::string::npos) << bad;
        }
    }
}

TEST(Parse, ZeroDenominatorAndHugeExponent) {
    const RingSpec r(1, false);
    EXPECT_THROW(parse_polynomial("1/0*x1", r), ParseError);
    EXPECT_THROW(parse_polynomial("x1^999", r), ParseError);
    EXPECT_THROW(parse_polynomial("(x1 + 1", r), ParseError);
}

TEST(Parse, ParenthesesAndPowers) {
    const RingSpec r(2, false);
    EXPECT_EQ(parse_polynomial("(x1 + x2)^2", r), parse_polynomial("x1^2 + 2*x1*x2 + x2^2", r));
    EXPECT_EQ(parse_polynomial("-(x1 - x2)", r), parse_polynomial("x2 - x1", r));
    EXPECT_TRUE(parse_polynomial("x1 - x1", r).is_zero());
}

TEST(Order, GradedReverseLexWithZLast) {
    const RingSpec r(2, true);
    auto m = [](int a, int b, int c) { return Monomial::from_exponents(std::vector<int>{a, b, c}); };
    const std::vector<Monomial> want{m(2, 0, 0), m(1, 1, 0), m(0, 2, 0), m(1, 0, 1), m(0, 1, 1), m(0, 0, 2)};
    EXPECT_EQ(monomials_of_degree(r, 2), want);
    EXPECT_GT(compare_grevlex(m(0, 0, 3), m(2, 0, 0)), 0);  // degree first
}

TEST(Order, EliminationBlockPutsAuxFirst) {
    const RingSpec aux = RingSpec(1, true).with_aux();
    const MonomialOrder ord = order_of(aux);
    const Monomial t = Monomial::variable(aux.t());
    const Monomial big = Monomial::variable(0, 5);
    EXPECT_TRUE(ord.greater(t, big));
}

TEST(Monomial, DivisibilityAndLcmAgreeWithExponents) {
    Gen g(11);
    const RingSpec r(3, true);
    for (int trial = 0; trial < 500; ++trial) {
        const Monomial a = g.monomial(r, g.integer(0, 6)), b = g.monomial(r, g.integer(0, 6));
        bool divides = true;
        for (int v = 0; v < r.num_vars(); ++v) {
            divides = divides && a.exponent(v) <= b.exponent(v);
            EXPECT_EQ(a.lcm(b).exponent(v), std::max(a.exponent(v), b.exponent(v)));
            EXPECT_EQ((a * b).exponent(v), a.exponent(v) + b.exponent(v));
        }
        EXPECT_EQ(a.divides(b), divides);
        EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
    Gen g(1);
    const RingSpec r(3, true);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = g.polynomial(r, 3, 4), h = g.polynomial(r, 3, 4), k = g.polynomial(r, 2, 3);
        EXPECT_EQ(f * h, h * f);
        EXPECT_EQ((f + h) * k, f * k + h * k);
        EXPECT_EQ((f * h) * k, f * (h * k));
        EXPECT_TRUE((f - f).is_zero());
        EXPECT_EQ(pow(f, 3), f * f * f);
    }
}

TEST(Polynomial, MultiplicationMatchesEvaluation) {
    Gen g(2);
    const RingSpec r(2, true);
    for (int trial = 0; trial < 60; ++trial) {
        const Polynomial f = g.polynomial(r, 4, 5), h = g.polynomial(r, 4, 5);
        const std::vector<Rational> pt{g.rational(), g.rational(), g.rational()};
        EXPECT_EQ(evaluate(f * h, pt), evaluate(f, pt) * evaluate(h, pt));
        EXPECT_EQ(evaluate(f + h, pt), evaluate(f, pt) + evaluate(h, pt));
    }
}

TEST(Polynomial, TextRoundTripIsAFixedPoint) {
    Gen g(3);
    const RingSpec r(3, true);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial f = g.polynomial(r, 4, 5);
        const std::string once = f.to_string();
        EXPECT_EQ(parse_polynomial(once, r), f);
        EXPECT_EQ(parse_polynomial(once, r).to_string(), once);
    }
}

TEST(Polynomial, LeibnizRule) {
    Gen g(4);
    const RingSpec r(2, true);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial f = g.polynomial(r, 4, 4), h = g.polynomial(r, 4, 4);
        const int v = g.integer(0, 2);
        EXPECT_EQ(partial_derivative(f * h, v), partial_derivative(f, v) * h + f * partial_derivative(h, v));
        EXPECT_EQ(partial_derivative(f, v, 2), partial_derivative(partial_derivative(f, v), v));
    }
}

TEST(Polynomial, SubstitutionMatchesEvaluation) {
    Gen g(5);
    const RingSpec r(2, false);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = g.polynomial(r, 4, 4), val = g.polynomial(r, 2, 3);
        const std::vector<Rational> pt{g.rational(), g.rational()};
        std::vector<Rational> moved = pt;
        moved[0] = evaluate(val, pt);
        EXPECT_EQ(evaluate(substitute(f, 0, val), pt), evaluate(f, moved));
    }
}

TEST(Polynomial, ExactDivision) {
    Gen g(6);
    const RingSpec r(3, false);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = g.polynomial(r, 3, 4), h = g.polynomial(r, 3, 3);
        if (h.is_zero()) continue;
        EXPECT_EQ(exact_divide(f * h, h), f);
    }
    EXPECT_THROW(exact_divide(x(r, 1) + x(r, 2), x(r, 1)), std::domain_error);
}

TEST(Polynomial, HomogeneityDegreesAndNormalisation) {
    const RingSpec r(2, false);
    const Polynomial p = P("4*x1^2 - 6*x1*x2", r);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_FALSE(P("x1^2 + x2", r).is_homogeneous());
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(Polynomial(r).degree(), -1);
    EXPECT_EQ(p.monic(), P("x1^2 - 3/2*x1*x2", r));
    EXPECT_EQ(P("1/2*x1 - 1/3*x2", r).primitive(), P("3*x1 - 2*x2", r));
    EXPECT_EQ(P("-2*x1", r).primitive(), P("x1", r));
}

TEST(Polynomial, RingMismatchIsAnError) {
    EXPECT_THROW(x(RingSpec(2, false), 1) + x(RingSpec(3, false), 1), RingMismatch);
    EXPECT_EQ(zvar(RingSpec(2, true)).in_ring(RingSpec(3, true)), zvar(RingSpec(3, true)));
    EXPECT_THROW(zvar(RingSpec(2, true)).in_ring(RingSpec(3, false)), RingMismatch);
}
