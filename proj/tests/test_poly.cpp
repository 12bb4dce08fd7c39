#include <doctest.h>

#include <random>

#include "orex/poly.hpp"

using orex::Poly;
using orex::Rational;
using orex::Scalar;

namespace {

Poly random_poly(std::mt19937_64& rng, unsigned max_degree, bool allow_zero = true) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    while (true) {
        Poly p;
        const unsigned d = deg(rng);
        for (unsigned e = 0; e <= d; ++e) {
            p += Poly::monomial(Scalar(Rational(num(rng), den(rng))), e);
        }
        if (allow_zero || !p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("polynomial degree and coefficient access") {
    Poly p = Poly::monomial(Scalar(Rational(3, 2)), 2) - Poly::x() + Poly(1);
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == Scalar(Rational(3, 2)));
    CHECK(p.coeff(1) == Scalar(-1));
    CHECK(p.coeff(0) == Scalar(1));
    CHECK(p.coeff(5) == Scalar(0));
    CHECK(p.leading_coeff() == Scalar(Rational(3, 2)));
    CHECK(p.str() == "3/2*x^2 - x + 1");

    CHECK(Poly().degree() == -1);
    CHECK(Poly().is_zero());
    CHECK(Poly().str() == "0");
    CHECK(Poly(7).is_constant());
    CHECK((Poly::x() - Poly::x()).degree() == -1);
}

TEST_CASE("polynomial ring axioms on random samples") {
    std::mt19937_64 rng(101u);
    for (int round = 0; round < 100; ++round) {
        const Poly a = random_poly(rng, 5);
        const Poly b = random_poly(rng, 5);
        const Poly c = random_poly(rng, 5);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Poly() == a);
        CHECK(a * Poly(1) == a);
        CHECK(a - a == Poly());
        if (!a.is_zero() && !b.is_zero()) {
            CHECK(a * b != Poly());  // integral domain
            CHECK((a * b).degree() == a.degree() + b.degree());
        }
    }
}

TEST_CASE("division with remainder reconstructs and bounds the remainder") {
    std::mt19937_64 rng(102u);
    for (int round = 0; round < 200; ++round) {
        const Poly f = random_poly(rng, 8);
        const Poly g = random_poly(rng, 4, /*allow_zero=*/false);
        const auto [q, r] = divmod(f, g);
        CHECK(q * g + r == f);
        CHECK((r.is_zero() || r.degree() < g.degree()));
        // Adding a multiple of g shifts the quotient, never the remainder.
        const Poly h = random_poly(rng, 3);
        const auto [q2, r2] = divmod(f + h * g, g);
        CHECK(r2 == r);
        CHECK(q2 == q + h);
    }
    CHECK_THROWS_AS(divmod(Poly::x(), Poly()), std::domain_error);
}

TEST_CASE("exact division accepts products and rejects non-multiples") {
    const Poly f = (Poly::x() + Poly(1)) * (Poly::x() - Poly(2));
    CHECK(orex::exact_div(f, Poly::x() + Poly(1)) == Poly::x() - Poly(2));
    CHECK_THROWS_AS(orex::exact_div(f + Poly(1), Poly::x() + Poly(1)), std::invalid_argument);
    CHECK(orex::divides(Poly::x() + Poly(1), f));
    CHECK_FALSE(orex::divides(Poly::x() + Poly(3), f));
}

TEST_CASE("gcd is the monic common divisor of maximal degree") {
    std::mt19937_64 rng(103u);
    for (int round = 0; round < 100; ++round) {
        const Poly a = random_poly(rng, 3);
        const Poly b = random_poly(rng, 3);
        const Poly g = orex::gcd(a, b);
        if (a.is_zero() && b.is_zero()) {
            CHECK(g.is_zero());
            continue;
        }
        CHECK(g.leading_coeff() == Scalar(1));
        CHECK(orex::divides(g, a));
        CHECK(orex::divides(g, b));
        // Sharpness: multiply both by a common factor and watch it appear.
        const Poly m = Poly::x() + Poly(5);
        CHECK(orex::gcd(a * m, b * m) == (g * m).monic());
    }
    CHECK(orex::gcd(Poly(), Poly::monomial(Scalar(3), 2)) == Poly::x() * Poly::x());
}

TEST_CASE("evaluation and composition are ring homomorphisms") {
    std::mt19937_64 rng(104u);
    std::uniform_int_distribution<long> pt(-5, 5);
    for (int round = 0; round < 50; ++round) {
        const Poly a = random_poly(rng, 4);
        const Poly b = random_poly(rng, 4);
        const Scalar alpha{Rational(pt(rng))};
        CHECK((a + b).eval(alpha) == a.eval(alpha) + b.eval(alpha));
        CHECK((a * b).eval(alpha) == a.eval(alpha) * b.eval(alpha));
        const Poly u = random_poly(rng, 2);
        CHECK((a * b).subst(u) == a.subst(u) * b.subst(u));
        CHECK((a + b).subst(u) == a.subst(u) + b.subst(u));
        CHECK(a.subst(Poly::x()) == a);
    }
    // Spot value: (3/2 x^2 - x + 1)(2) = 5.
    const Poly p = Poly::monomial(Scalar(Rational(3, 2)), 2) - Poly::x() + Poly(1);
    CHECK(p.eval(Scalar(2)) == Scalar(5));
}

TEST_CASE("monic normalization") {
    const Poly p = Poly::monomial(Scalar(4), 3) + Poly::monomial(Scalar(2), 1);
    CHECK(p.monic().leading_coeff() == Scalar(1));
    CHECK(p.monic() == Poly::x(3) + Poly::monomial(Scalar(Rational(1, 2)), 1));
    CHECK(Poly().monic() == Poly());
}

TEST_CASE("polynomials print with cyclotomic coefficients parenthesized") {
    const Poly p = Poly::monomial(Scalar::zeta(4) + Scalar(1), 1) + Poly(Scalar(-Scalar::zeta(4)));
    CHECK(p.str() == "(zeta(4) + 1)*x + (-zeta(4))");
}
