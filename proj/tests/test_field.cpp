// Exact arithmetic substrate: multivariate polynomials over Q, rational
// functions in canonical form, expression parsing, the projective line, and
// fractional-linear maps.  Expected values are computed by hand and frozen.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "addchow/error.hpp"
#include "addchow/expr.hpp"
#include "addchow/poly.hpp"
#include "addchow/projective.hpp"
#include "addchow/ratfunc.hpp"

using namespace addchow;

namespace {
const Poly U = Poly::var("u");
const Poly V = Poly::var("v");
Poly P(long c) { return Poly(c); }
}  // namespace

TEST_CASE("polynomial ring basics") {
    CHECK(Poly().is_zero());
    CHECK(Poly().total_degree() == -1);
    CHECK(P(0).is_zero());
    CHECK(P(7).is_constant());
    CHECK(P(7).constant_value() == Rat(7));
    CHECK_FALSE(U.is_constant());

    // binomial square, computed termwise by hand
    Poly square = (U + V) * (U + V);
    Poly expected = U * U + P(2) * U * V + V * V;
    CHECK(square == expected);
    CHECK(square.total_degree() == 2);
    CHECK(square.degree_in("u") == 2);
    CHECK(square.degree_in("w") == 0);

    CHECK((U - U).is_zero());
    CHECK(U.pow(0) == P(1));
    CHECK(U.pow(3) == U * U * U);
    CHECK(-U + U == Poly());
}

TEST_CASE("polynomial leading data and evaluation") {
    Poly p = P(3) * U * U + V;  // grlex leading term is 3 u^2
    CHECK(p.leading_coeff() == Rat(3));
    CHECK(Poly().leading_coeff() == Rat(0));

    std::map<std::string, Rat> pt{{"u", Rat(2)}, {"v", Rat(3)}};
    CHECK((U * U * V).eval(pt) == Rat(12));
    CHECK(p.eval(pt) == Rat(15));

    CHECK((U * U * V).derivative("u") == P(2) * U * V);
    CHECK((U * U * V).derivative("w").is_zero());
}

TEST_CASE("polynomial exact division and gcd") {
    Poly diff_sq = U * U - V * V;
    auto q = Poly::try_divide(diff_sq, U + V);
    REQUIRE(q.has_value());
    CHECK(*q == U - V);
    CHECK_FALSE(Poly::try_divide(U * U + V * V, U + V).has_value());

    // common factor u - v, returned grlex-monic
    CHECK(Poly::gcd(diff_sq, (U - V) * (U - V)) == U - V);
    CHECK(Poly::gcd(Poly(), Poly()).is_zero());
    CHECK(Poly::gcd(P(4) * U, P(6) * U) == U);
}

TEST_CASE("polynomial total order is consistent") {
    std::vector<Poly> sample{Poly(), P(1), U, V, U + V, U * V, U * U};
    for (const Poly& a : sample)
        for (const Poly& b : sample) {
            int ab = Poly::compare(a, b), ba = Poly::compare(b, a);
            CHECK(((ab == 0) == (a == b)));
            CHECK(ab == -ba);
        }
}

TEST_CASE("rational functions reduce to canonical form") {
    // (u^2 - 1)/(u - 1) collapses to u + 1
    RatFunc f(U * U - P(1), U - P(1));
    CHECK(f == RatFunc(U + P(1)));
    CHECK(f.den() == P(1));

    // constants migrate so the denominator is monic
    RatFunc g(P(2) * U, P(2) * V);
    CHECK(g == RatFunc(U, V));
    RatFunc h(U, P(4) * V);
    CHECK(h.den() == V);
    CHECK(h.num() == Poly(Rat(1, 4)) * U);

    CHECK(RatFunc(Poly(), U).is_zero());
    CHECK(RatFunc(Poly(), U).den() == P(1));  // zero is 0/1
    CHECK(RatFunc(1).is_one());
    CHECK(RatFunc::var("u").depends_on("u"));
    CHECK_FALSE(RatFunc::var("u").depends_on("v"));
}

TEST_CASE("rational function arithmetic is exact") {
    RatFunc u = RatFunc::var("u"), v = RatFunc::var("v");
    CHECK(RatFunc(1) / u + RatFunc(1) / v == RatFunc(U + V, U * V));
    CHECK(u / u == RatFunc(1));
    CHECK(u - u == RatFunc());
    CHECK(u.inverse() * u == RatFunc(1));
    CHECK((u / v).inverse() == v / u);

    CHECK_THROWS_AS(u / RatFunc(), DomainError);
    CHECK_THROWS_AS(RatFunc().inverse(), DomainError);

    // quotient-rule derivative of 1/u
    CHECK(RatFunc(1) / u == u.inverse());
    CHECK(u.inverse().derivative("u") == -RatFunc(P(1), U * U));

    // substitution u -> 1/w turns (u+1)/(u-1) into (1+w)/(1-w)
    RatFunc w = RatFunc::var("w");
    RatFunc fr = (u + RatFunc(1)) / (u - RatFunc(1));
    CHECK(fr.substitute("u", w.inverse()) ==
          (RatFunc(1) + w) / (RatFunc(1) - w));
}

TEST_CASE("expression parser matches direct construction") {
    RatFunc u = RatFunc::var("u");
    CHECK(parse_ratfunc("(u^2 - 1)/(u - 1)") == u + RatFunc(1));
    CHECK(parse_ratfunc("2/3") == RatFunc(Rat(2, 3)));
    CHECK(parse_ratfunc("-u + u").is_zero());
    CHECK(parse_ratfunc("(b1*s - b1*b2)/(s - b1*b2)") ==
          (parse_ratfunc("b1") * parse_ratfunc("s") - parse_ratfunc("b1*b2")) /
              (parse_ratfunc("s") - parse_ratfunc("b1*b2")));

    CHECK_THROWS_AS(parse_ratfunc("((u"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("u +"), ParseError);
    CHECK_THROWS_AS(parse_ratfunc("u + q", std::set<std::string>{"u"}), ParseError);
    CHECK(parse_ratfunc("u", std::set<std::string>{"u"}) == u);
}

TEST_CASE("projective line values") {
    ProjValue zero;
    ProjValue inf = ProjValue::infinity();
    CHECK(zero.is_zero());
    CHECK(inf.is_infinite());
    CHECK(zero.reciprocal() == inf);
    CHECK(inf.reciprocal() == zero);
    CHECK(ProjValue(1).is_one());

    RatFunc u = RatFunc::var("u");
    CHECK(ProjValue(u).reciprocal() == ProjValue(u.inverse()));
    CHECK(ProjValue::ratio(u, RatFunc()) == inf);
    CHECK(ProjValue::ratio(u, RatFunc(1)) == ProjValue(u));
    CHECK_THROWS_AS(ProjValue::ratio(RatFunc(), RatFunc()), Error);

    CHECK(parse_proj("inf").is_infinite());
    CHECK(parse_proj("2/3") == ProjValue(RatFunc(Rat(2, 3))));
    CHECK(ProjValue::compare(zero, inf) == -ProjValue::compare(inf, zero));
}

TEST_CASE("fractional-linear maps: evaluation and solving") {
    RatFunc b1 = RatFunc::var("b1"), b2 = RatFunc::var("b2");
    RatFunc f = parse_ratfunc("(b1*s - b1*b2)/(s - b1*b2)");
    Mobius m = Mobius::from_ratfunc(f, "s");

    CHECK(m.eval(ProjValue()).is_one());                       // f(0) = 1
    CHECK(m.eval(ProjValue::infinity()) == ProjValue(b1));     // f(inf) = b1
    auto at_zero = m.solve(ProjValue());
    REQUIRE(at_zero.has_value());
    CHECK(*at_zero == ProjValue(b2));                          // f(b2) = 0
    auto at_inf = m.solve(ProjValue::infinity());
    REQUIRE(at_inf.has_value());
    CHECK(*at_inf == ProjValue(b1 * b2));                      // pole at b1 b2
    CHECK(m.as_ratfunc("s") == f);
    CHECK_FALSE(m.is_constant());
    CHECK_FALSE(m.det().is_zero());

    CHECK(Mobius::identity().eval(ProjValue(RatFunc(5))) == ProjValue(RatFunc(5)));
    // projective normalization: scaling all four entries is invisible
    CHECK(Mobius(RatFunc::var("a"), RatFunc(), RatFunc(), RatFunc(1)) ==
          Mobius(RatFunc::var("a") * RatFunc(3), RatFunc(), RatFunc(), RatFunc(3)));

    CHECK_THROWS_AS(Mobius::from_ratfunc(parse_ratfunc("s^2"), "s"), Error);
}

TEST_CASE("constant fractional-linear maps flag improper targets") {
    RatFunc u = RatFunc::var("u"), v = RatFunc::var("v");
    Mobius c = Mobius::constant(u);
    CHECK(c.is_constant());
    CHECK(c.eval(ProjValue(RatFunc(7))) == ProjValue(u));
    CHECK_FALSE(c.solve(ProjValue(v)).has_value());            // misses v
    CHECK_THROWS_AS(c.solve(ProjValue(u)), ImproperIntersection);
}
