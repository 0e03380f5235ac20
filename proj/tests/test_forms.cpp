// Differential forms with exact rational-function coefficients, the exterior
// derivative and dlog calculus, the form parser, and the regulator on
// zero-dimensional cycles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "addchow/error.hpp"
#include "addchow/expr.hpp"
#include "addchow/forms.hpp"
#include "addchow/totaro.hpp"

using namespace addchow;

namespace {
const RatFunc U = RatFunc::var("u");
const RatFunc V = RatFunc::var("v");
const RatFunc W = RatFunc::var("w");
const RatFunc X = RatFunc::var("x");
const RatFunc T1 = RatFunc::var("t1");
const RatFunc T2 = RatFunc::var("t2");
}  // namespace

TEST_CASE("total differential obeys the product and quotient rules") {
    CHECK(DiffForm::d(U * V) == DiffForm::d(U).scaled(V) + DiffForm::d(V).scaled(U));
    CHECK(DiffForm::d(RatFunc(7)).is_zero());
    RatFunc f = (U + RatFunc(1)) / (U - RatFunc(1));
    CHECK(DiffForm::d(f) ==
          DiffForm::d(U).scaled(RatFunc(-2) / ((U - RatFunc(1)) * (U - RatFunc(1)))));
}

TEST_CASE("dlog is a homomorphism from products to sums") {
    CHECK(DiffForm::dlog(U * V) == DiffForm::dlog(U) + DiffForm::dlog(V));
    CHECK(DiffForm::dlog(U / V) == DiffForm::dlog(U) - DiffForm::dlog(V));
    CHECK(DiffForm::dlog(RatFunc(5)).is_zero());
    CHECK(DiffForm::dlog(U / U).is_zero());
    CHECK_THROWS_AS(DiffForm::dlog(RatFunc()), Error);
    // dlog(u^3) = 3 dlog(u)
    CHECK(DiffForm::dlog(U * U * U) == DiffForm::dlog(U).scaled(Int(3)));
}

TEST_CASE("wedge is graded-commutative and associative") {
    DiffForm du = DiffForm::d(U), dv = DiffForm::d(V), dw = DiffForm::d(W);
    CHECK(wedge(du, du).is_zero());
    CHECK(wedge(du, dv) == -wedge(dv, du));
    CHECK(wedge(wedge(du, dv), dw) == wedge(du, wedge(dv, dw)));
    // degree 1 against degree 2 commutes with sign (-1)^2 = +1
    DiffForm dvw = wedge(dv, dw);
    CHECK(wedge(du, dvw) == wedge(dvw, du));
    CHECK(DiffForm(2) == DiffForm(5));  // zero forms of any degree agree
    CHECK(wedge(DiffForm::scalar(U), dv) == dv.scaled(U));
}

TEST_CASE("exterior derivative squares to zero and extends d") {
    RatFunc f = U * V + V.inverse();
    CHECK(exterior_d(DiffForm::scalar(f)) == DiffForm::d(f));
    CHECK(exterior_d(DiffForm::d(f)).is_zero());
    CHECK(exterior_d(DiffForm::dlog(f)).is_zero());

    DiffForm w = DiffForm::monomial(f, {"u"});
    CHECK(exterior_d(exterior_d(w)).is_zero());

    // graded Leibniz: d(a ^ b) = da ^ b + (-1)^deg(a) a ^ db
    DiffForm a = DiffForm::monomial(U * V, {"u"});
    DiffForm b = DiffForm::monomial(V.inverse(), {"v"});
    CHECK(exterior_d(wedge(a, b)) ==
          wedge(exterior_d(a), b) - wedge(a, exterior_d(b)));
}

TEST_CASE("form parser agrees with programmatic construction") {
    CHECK(parse_form("dlog(u) ^ dlog(v)") == wedge(DiffForm::dlog(U), DiffForm::dlog(V)));
    CHECK(parse_form("d(u*v)") == DiffForm::d(U * V));
    CHECK(parse_form("(1/u) * d(v) ^ d(w) + d(u) ^ d(v)") ==
          wedge(DiffForm::d(V), DiffForm::d(W)).scaled(U.inverse()) +
              wedge(DiffForm::d(U), DiffForm::d(V)));
    CHECK_THROWS_AS(parse_form("d(u) + d(u) ^ d(v)"), Error);  // mixed degrees
    CHECK(parse_form("d(u) ^ d(u)").is_zero());
    CHECK(parse_form("3 * dlog(u)") == DiffForm::dlog(U).scaled(Int(3)));
    CHECK_THROWS_AS(parse_form("dlog()"), ParseError);
    CHECK_THROWS_AS(parse_form("^ d(u)"), ParseError);
}

TEST_CASE("regulator on points: dlog wedge scaled by the reciprocal coordinate") {
    ModulusRing m2 = ModulusRing::monomial(2);
    FormalCycle z = point_cycle(m2, {X}, {ProjValue(T1), ProjValue(T2)});
    DiffForm expected =
        wedge(DiffForm::dlog(T1), DiffForm::dlog(T2)).scaled(X.inverse());
    CHECK(reg(z) == expected);
    CHECK(reg(z) == parse_form("(1/x) * dlog(t1) ^ dlog(t2)"));

    // additivity with integer weights
    FormalCycle z2 = point_cycle(m2, {X * X}, {ProjValue(T2), ProjValue(T1)});
    CHECK(reg(z + z2.scaled(Int(-3))) == reg(z) - reg(z2).scaled(Int(3)));

    // slotless points map to the reciprocal coordinate itself
    FormalCycle u = point_cycle(m2, {X}, {});
    CHECK(reg(u) == DiffForm::scalar(X.inverse()));
}

TEST_CASE("regulator kills symbolic curve boundaries") {
    FormalCycle c2 = totaro_c2(RatFunc::var("a"), RatFunc::var("b1"), RatFunc::var("b2"));
    CHECK(reg(boundary(c2)).is_zero());
    CHECK_THROWS_AS(reg(c2), Error);  // defined on point cycles only
}

TEST_CASE("regulator intertwines insertion with a scaled exterior derivative") {
    ModulusRing m2 = ModulusRing::monomial(2);
    FormalCycle z1 = point_cycle(m2, {X}, {ProjValue(T1)});
    FormalCycle z2 = point_cycle(m2, {X}, {ProjValue(T1), ProjValue(T2)});
    RegDeltaReport r1 = reg_delta_factor_check(z1);
    RegDeltaReport r2 = reg_delta_factor_check(z2);
    CHECK(r1.ok);
    CHECK(r2.ok);
    CHECK(r1.factor == 2);  // slot count plus one
    CHECK(r2.factor == 3);
    CHECK((r1.sign == 1 || r1.sign == -1));
    CHECK(r1.sign == r2.sign);  // the global sign is run-constant
}
