#include <doctest.h>

#include <random>

#include "orex/linalg.hpp"
#include "orex/multi_derivation.hpp"

using orex::LieDatum;
using orex::LocalNilpotency;
using orex::MPoly;
using orex::MultiDerivation;
using orex::Rational;
using orex::RowSpace;
using orex::Scalar;
using orex::Vec;

namespace {

MPoly random_mpoly(std::mt19937_64& rng, unsigned nvars, unsigned max_degree) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<unsigned> nterms(1, 5);
    MPoly p(nvars);
    const unsigned k = nterms(rng);
    for (unsigned t = 0; t < k; ++t) {
        std::vector<unsigned> e(nvars);
        unsigned budget = deg(rng);
        for (auto& ei : e) {
            std::uniform_int_distribution<unsigned> part(0, budget);
            ei = part(rng);
            budget -= ei;
        }
        p += MPoly::monomial(nvars, e, Scalar(coeff(rng)));
    }
    return p;
}

const MPoly kZero2 = MPoly(2);

MPoly x1() { return MPoly::variable(2, 0); }
MPoly x2() { return MPoly::variable(2, 1); }
MPoly one2() { return MPoly::constant(2, Scalar(1)); }

}  // namespace

TEST_CASE("derivation images extend by the Leibniz rule") {
    // d(x1) = x2^2, d(x2) = 1.
    const MultiDerivation d({x2() * x2(), one2()});
    CHECK(d.d(x1() * x2()) == x2() * x2() * x2() + x1());
    CHECK(d.d(x1() * x1()) == Scalar(2) * (x1() * x2() * x2()));
    CHECK(d.d(one2()).is_zero());
    CHECK(d.d(kZero2).is_zero());

    std::mt19937_64 rng(401u);
    for (int round = 0; round < 80; ++round) {
        const MPoly p = random_mpoly(rng, 2, 4);
        const MPoly q = random_mpoly(rng, 2, 4);
        CHECK(d.d(p * q) == d.d(p) * q + p * d.d(q));
        CHECK(d.d(p + q) == d.d(p) + d.d(q));
    }
}

TEST_CASE("derivation construction validates arities") {
    CHECK_THROWS_AS(MultiDerivation({}), std::invalid_argument);
    CHECK_THROWS_AS(MultiDerivation({MPoly::variable(3, 0), MPoly(3)}),
                    std::invalid_argument);
    const MultiDerivation d({one2(), kZero2});
    CHECK_THROWS_AS(d.d(MPoly::variable(3, 1)), std::invalid_argument);
}

TEST_CASE("local nilpotency: triangular orders are found greedily") {
    // d(x1) = x2, d(x2) = 1: admissible order is x2 before x1.
    const MultiDerivation d1({x2(), one2()});
    const auto r1 = check_locally_nilpotent(d1, 10);
    CHECK(r1.kind == LocalNilpotency::Kind::Triangular);
    CHECK(r1.order == std::vector<unsigned>{1, 0});

    // d(x1) = x2^2, d(x2) = 0.
    const MultiDerivation d2({x2() * x2(), kZero2});
    const auto r2 = check_locally_nilpotent(d2, 10);
    CHECK(r2.kind == LocalNilpotency::Kind::Triangular);
    CHECK(r2.order == std::vector<unsigned>{1, 0});

    // Three variables, images d(x1) = x3, d(x2) = 5, d(x3) = 0.
    const MultiDerivation d3({MPoly::variable(3, 2), MPoly::constant(3, Scalar(5)), MPoly(3)});
    const auto r3 = check_locally_nilpotent(d3, 10);
    CHECK(r3.kind == LocalNilpotency::Kind::Triangular);

    // Any returned order must actually be admissible: each image may only
    // involve variables listed earlier.
    std::vector<bool> seen(3, false);
    for (const unsigned j : r3.order) {
        for (const auto& [e, c] : d3.images[j].terms()) {
            for (size_t k = 0; k < e.size(); ++k) {
                if (e[k] > 0) CHECK(seen[k]);
            }
        }
        seen[j] = true;
    }
}

TEST_CASE("local nilpotency: iteration handles non-triangular derivations") {
    // d(x1) = d(x2) = x1 - x2 kills x1 - x2, so d^2 vanishes on the
    // generators, yet no variable order is triangular.
    const MultiDerivation d({x1() - x2(), x1() - x2()});
    const auto r = check_locally_nilpotent(d, 10);
    CHECK(r.kind == LocalNilpotency::Kind::Nilpotent);
    CHECK(r.max_iterations == 2);

    // Nilpotency on generators propagates to arbitrary polynomials.
    std::mt19937_64 rng(402u);
    for (int round = 0; round < 20; ++round) {
        MPoly p = random_mpoly(rng, 2, 3);
        for (int k = 0; k < 4; ++k) p = d.d(p);
        CHECK(p.is_zero());
    }
}

TEST_CASE("local nilpotency: the bound is honest") {
    const MultiDerivation d({MPoly::variable(1, 0)});
    const auto r = check_locally_nilpotent(d, 10);
    CHECK(r.kind == LocalNilpotency::Kind::NotNilpotentWithinBound);
    CHECK_FALSE(r.certified());
    CHECK_THROWS_AS(check_locally_nilpotent(d, 0), std::invalid_argument);
}

TEST_CASE("lie datum: translation in one variable gives the Heisenberg algebra") {
    const MultiDerivation d({MPoly::constant(1, Scalar(5))});
    const LieDatum datum = lie_datum(d, 10);
    CHECK(datum.v_set == std::vector<MPoly>{MPoly::variable(1, 0), MPoly::constant(1, Scalar(5))});
    CHECK(datum.dim_h() == 2);
    CHECK(datum.dim_g() == 3);
    CHECK(datum.nilpotency_class == 2);
}

TEST_CASE("lie datum: the two-variable chain has class three") {
    const MultiDerivation d({x2(), one2()});
    const LieDatum datum = lie_datum(d, 10);
    CHECK(datum.v_set == std::vector<MPoly>{x1(), x2(), one2()});
    CHECK(datum.dim_h() == 3);
    CHECK(datum.dim_g() == 4);
    CHECK(datum.nilpotency_class == 3);
}

TEST_CASE("lie datum: the zero derivation is abelian") {
    const MultiDerivation d({MPoly(1)});
    const LieDatum datum = lie_datum(d, 10);
    CHECK(datum.dim_h() == 1);
    CHECK(datum.nilpotency_class == 1);
}

TEST_CASE("lie datum: overlapping chains deduplicate and stay consistent") {
    const MultiDerivation d({x1() - x2(), x1() - x2()});
    const LieDatum datum = lie_datum(d, 10);
    CHECK(datum.v_set == std::vector<MPoly>{x1(), x1() - x2(), x2()});
    CHECK(datum.dim_h() == 2);
    CHECK(datum.nilpotency_class == 2);
}

TEST_CASE("lie datum: basis spans the iterates and is closed under d") {
    const std::vector<MultiDerivation> cases = {
        MultiDerivation({x2(), one2()}),
        MultiDerivation({x1() - x2(), x1() - x2()}),
        MultiDerivation({x2() * x2(), kZero2}),
        MultiDerivation({MPoly::constant(1, Scalar(Rational(2, 3)))}),
    };
    for (const auto& d : cases) {
        const LieDatum datum = lie_datum(d, 10);

        // Shared coordinates for everything we need to place in the span.
        std::map<std::vector<unsigned>, size_t> coord;
        auto note = [&coord](const MPoly& p) {
            for (const auto& [e, c] : p.terms()) coord.emplace(e, coord.size());
        };
        for (const auto& p : datum.v_set) note(p);
        for (const auto& p : datum.basis_h) note(d.d(p));
        auto to_vec = [&coord](const MPoly& p) {
            Vec v(coord.size(), Scalar(0));
            for (const auto& [e, c] : p.terms()) v[coord.at(e)] = c;
            return v;
        };

        RowSpace span;
        for (const auto& p : datum.basis_h) CHECK(span.insert(to_vec(p)));
        for (const auto& p : datum.v_set) CHECK(span.contains(to_vec(p)));
        for (const auto& p : datum.basis_h) CHECK(span.contains(to_vec(d.d(p))));
    }
}

TEST_CASE("lie datum rejects derivations it cannot certify") {
    CHECK_THROWS_AS(lie_datum(MultiDerivation({MPoly::variable(1, 0)}), 10),
                    std::invalid_argument);
}

TEST_CASE("principal ideal contraction and extension invert each other") {
    CHECK(orex::verify_lattice_iso_principal(x2()));
    CHECK(orex::verify_lattice_iso_principal(x2() * x2() + one2()));
    CHECK(orex::verify_lattice_iso_principal(one2()));

    CHECK_THROWS_AS(orex::verify_lattice_iso_principal(kZero2), std::invalid_argument);
    CHECK_THROWS_AS(orex::verify_lattice_iso_principal(x1()), std::invalid_argument);
    CHECK_THROWS_AS(orex::verify_lattice_iso_principal(MPoly::variable(1, 0)),
                    std::invalid_argument);

    std::mt19937_64 rng(403u);
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> deg(0, 4);
    for (int round = 0; round < 30; ++round) {
        MPoly g(2);
        const unsigned top = deg(rng);
        for (unsigned e = 0; e <= top; ++e) {
            g += MPoly::monomial(2, {0u, e}, Scalar(coeff(rng)));
        }
        if (g.is_zero()) g = one2();
        CHECK(orex::verify_lattice_iso_principal(g));
    }
}
