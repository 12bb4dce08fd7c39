#pragma once

#include "orex/rational.hpp"

#include <vector>

namespace orex {

// Element of the cyclotomic field Q(zeta_n), where zeta_n is a primitive
// n-th root of unity. A value is stored as its residue modulo the n-th
// cyclotomic polynomial Phi_n: a dense vector of phi(n) rational coordinates
// in the power basis 1, z, z^2, ..., z^{phi(n)-1}. Phi_n is irreducible over
// Q, so Q[z]/(Phi_n) is a field and every nonzero residue is invertible.
//
// Arithmetic is only defined between elements with the same conductor n;
// mixing conductors is the caller's error (Scalar enforces this and reports
// it). Conductors 1 and 2 are permitted here (their residues are plain
// rationals); Scalar never stores them.
class Cyclotomic {
public:
    // The generator zeta_n itself.
    static Cyclotomic zeta(unsigned conductor);

    // Residue with the given coordinates; shorter vectors are zero-padded,
    // longer ones are reduced modulo Phi_n.
    static Cyclotomic from_coords(unsigned conductor, std::vector<Rational> coords);

    static Cyclotomic from_rational(unsigned conductor, const Rational& r);

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    // True when the residue lies in Q, i.e. all coordinates above the
    // constant one vanish.
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Multiplicative inverse via the extended Euclidean algorithm against
    // Phi_n; throws std::domain_error on zero.
    Cyclotomic inverse() const;

    Cyclotomic pow(long e) const;

    // Polynomial in "zeta(n)", e.g. "zeta(8)^3 - 1/2*zeta(8) + 3".
    std::string str() const;

    // Dense coefficient vector of Phi_n (degree phi(n), monic), cached.
    static const std::vector<Rational>& minimal_polynomial(unsigned conductor);

    static unsigned totient(unsigned n);
    static std::vector<unsigned> divisors(unsigned n);

private:
    Cyclotomic(unsigned conductor, std::vector<Rational> coords);

    unsigned conductor_;
    std::vector<Rational> coords_;  // length phi(conductor)
};

}  // namespace orex
