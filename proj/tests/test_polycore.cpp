#include <doctest.h>

#include <sstream>

#include "dortho/errors.hpp"
#include "dortho/poly.hpp"
#include "oracle.hpp"

using dortho::Poly;
using dortho::Rational;

TEST_CASE("rational parse and canonical form") {
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational::parse("0/5").str() == "0");
    CHECK(Rational::parse("12").str() == "12");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
    for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "+3", "2/-3", "x"})
        CHECK_THROWS_AS(Rational::parse(bad), dortho::ParseError);
}

TEST_CASE("rational arithmetic") {
    const Rational a(1, 3), b(-5, 7);
    CHECK(a + b == Rational(-8, 21));
    CHECK(a * b == Rational(-5, 21));
    CHECK(a / b == Rational(-7, 15));
    CHECK(-b == Rational(5, 7));
    CHECK(b < a);
    CHECK(abs(b) == Rational(5, 7));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(dortho::binomial(10, 3) == 120);
    CHECK(dortho::binomial(3, 5) == 0);
    CHECK(dortho::factorial(6) == 720);
}

TEST_CASE("poly basics") {
    const Poly z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero());
    CHECK(Poly{Rational(1), Rational(0), Rational(0)}.degree() == 0);
    CHECK(z * Poly{Rational(3)} == z);

    const Poly p{Rational(8), Rational(-24), Rational(24), Rational(1)};
    CHECK(p.str() == "x^3 + 24*x^2 - 24*x + 8");
    CHECK(p.is_monic());
    CHECK(p.coeff(7) == 0);
    CHECK(p.coeff(-1) == 0);
    CHECK(p(Rational(1)) == Rational(9));
    CHECK(derivative(p) == Poly{Rational(-24), Rational(48), Rational(3)});
    CHECK(derivative(p, 3) == Poly{Rational(6)});
    CHECK(derivative(p, 4).is_zero());
    CHECK(Poly{Rational(1, 2), Rational(-1)}.str() == "-x + 1/2");
    CHECK(z.str() == "0");
    CHECK(Poly::x().shift(2) == Poly::monomial(3));

    std::ostringstream os;
    os << Poly{Rational(0), Rational(-3, 4)};
    CHECK(os.str() == "-3/4*x");
}

TEST_CASE("property: ring axioms against the reference arithmetic") {
    oracle::Gen g(20240601u);
    for (int t = 0; t < 250; ++t) {
        const Poly a = g.poly(12), b = g.poly(12), c = g.poly(12);
        const Rational s = g.rational();
        REQUIRE(oracle::same(a + b, oracle::add(oracle::to_coeffs(a), oracle::to_coeffs(b))));
        REQUIRE(oracle::same(a * b, oracle::mul(oracle::to_coeffs(a), oracle::to_coeffs(b))));
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE(a - a == Poly{});
        REQUIRE(a * Poly{Rational(1)} == a);
        REQUIRE((a * s) * b == s * (a * b));
        if (!a.is_zero() && !b.is_zero()) REQUIRE((a * b).degree() == a.degree() + b.degree());
        // evaluation is a ring homomorphism
        const Rational x0 = g.rational(5, 3);
        REQUIRE((a * b)(x0) == a(x0) * b(x0));
        REQUIRE((a + b)(x0) == a(x0) + b(x0));
        // Leibniz for D and agreement with the reference derivative
        REQUIRE(derivative(a * b) == derivative(a) * b + a * derivative(b));
        REQUIRE(oracle::same(derivative(a), oracle::diff(oracle::to_coeffs(a))));
        // stored form is always trimmed
        REQUIRE((a.is_zero() || !a.leading().is_zero()));
    }
}
