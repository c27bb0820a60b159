#include "qgrass/coeff.hpp"

#include "random_elements.hpp"

#include "doctest.h"

#include <random>

using namespace qgrass;

namespace {
const LaurentPoly q = LaurentPoly::q(1);
const LaurentPoly qi = LaurentPoly::q(-1);
} // namespace

TEST_CASE("laurent arithmetic examples")
{
    CHECK((q - qi) + (qi - q) == LaurentPoly{});
    CHECK((q - qi) * (q + qi) == LaurentPoly::q(2) - LaurentPoly::q(-2));
    CHECK(LaurentPoly::q(2) * LaurentPoly::q(-2) == LaurentPoly(1));
    CHECK(-(q - qi) == qi - q);
    CHECK(q_minus_qinv() == q - qi);
}

TEST_CASE("evaluation examples")
{
    CHECK((q - qi).eval(2) == Rational(3, 2));
    CHECK(LaurentPoly(1).eval(Rational(7, 3)) == 1);
    CHECK(LaurentPoly::q(2).eval(-1) == 1);
    CHECK_THROWS_AS(q.eval(0), DomainError);
    CHECK(LaurentPoly::q(-3).eval(Rational(1, 2)) == 8);
}

TEST_CASE("zero test examples")
{
    CHECK(lp_is_zero(LaurentPoly{}));
    CHECK(lp_is_zero(LaurentPoly(0)));
    CHECK(lp_is_zero(q - q));
    CHECK_FALSE(lp_is_zero(q - qi));
}

TEST_CASE("parse_rational")
{
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational(" 5/7 ") == Rational(5, 7));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
}

TEST_CASE("to_string")
{
    CHECK((q - qi).to_string() == "q - q^-1");
    CHECK(LaurentPoly(1).to_string() == "1");
    CHECK(LaurentPoly{}.to_string() == "0");
    CHECK(LaurentPoly::monomial(Rational(-2, 3), 2).to_string() == "-2/3*q^2");
}

TEST_CASE("units and exact division")
{
    CHECK(LaurentPoly::monomial(Rational(2, 3), -4).is_unit());
    CHECK_FALSE((q - qi).is_unit());
    CHECK_FALSE(LaurentPoly{}.is_unit());
    CHECK(LaurentPoly::monomial(Rational(2, 3), -4).unit_inverse() == LaurentPoly::monomial(Rational(3, 2), 4));
    CHECK_THROWS_AS((q + 1).unit_inverse(), DomainError);

    const LaurentPoly a = q + 1, b = LaurentPoly::q(2) - qi;
    auto quo = (a * b).divide_exact(b);
    REQUIRE(quo);
    CHECK(*quo == a);
    CHECK_FALSE((q + 2).divide_exact(q + 1).has_value());
}

TEST_CASE("coefficient accessors")
{
    const LaurentPoly p = LaurentPoly::monomial(3, -2) + LaurentPoly::monomial(Rational(1, 2), 5);
    CHECK(p.min_exponent() == -2);
    CHECK(p.max_exponent() == 5);
    CHECK(p.coeff(5) == Rational(1, 2));
    CHECK(p.coeff(0) == 0);
    CHECK_FALSE(p.is_constant());
    CHECK(LaurentPoly(4).is_constant());
}

TEST_CASE("ring axioms on random polynomials")
{
    std::mt19937 rng(20261018);
    for (int n = 0; n < 300; ++n) {
        const auto a = testing_support::random_poly(rng), b = testing_support::random_poly(rng),
                   c = testing_support::random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly{});
        CHECK(a * LaurentPoly(1) == a);
    }
}

TEST_CASE("evaluation is a ring homomorphism")
{
    std::mt19937 rng(7);
    const Rational points[] = {Rational(3, 2), Rational(5, 7), Rational(-2), Rational(11, 3)};
    for (int n = 0; n < 200; ++n) {
        const auto a = testing_support::random_poly(rng), b = testing_support::random_poly(rng);
        for (const auto& x : points) {
            CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
            CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
        }
    }
}

TEST_CASE("canonical form is unique")
{
    // The same polynomial assembled in different orders, with cancelling
    // pairs, compares equal and prints identically.
    std::mt19937 rng(99);
    for (int n = 0; n < 200; ++n) {
        const auto a = testing_support::random_poly(rng), b = testing_support::random_poly(rng);
        const LaurentPoly x = a + b + (b - b);
        const LaurentPoly y = b + a;
        CHECK(x == y);
        CHECK(x.to_string() == y.to_string());
        for (const auto& [e, c] : x.terms())
            CHECK(c != 0);
    }
}
