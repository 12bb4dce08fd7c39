#pragma once

#include "orex/cyclotomic.hpp"
#include "orex/rational.hpp"

#include <optional>
#include <string>
#include <variant>

namespace orex {

// Exact field element: either a rational number or an element of one
// cyclotomic field Q(zeta_n). Mixed rational/cyclotomic arithmetic promotes
// the rational operand into the cyclotomic field; combining two cyclotomic
// values with different conductors is rejected, which keeps every value in a
// single well-defined field and normal forms canonical. A cyclotomic result
// whose residue happens to be rational collapses back to the Rational
// alternative, so stored cyclotomic values are always irrational (conductor
// at least 3).
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(Rational r) : v_(std::move(r)) {}
    Scalar(const Cyclotomic& c) { assign(c); }

    static Scalar zeta(unsigned conductor) { return Scalar(Cyclotomic::zeta(conductor)); }

    bool is_rational() const { return std::holds_alternative<Rational>(v_); }
    // 0 for rational values, the conductor n otherwise.
    unsigned conductor() const;

    const Rational& rational() const;      // requires is_rational()
    const Cyclotomic& cyclotomic() const;  // requires !is_rational()

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(long e) const;

    std::string str() const;

private:
    void assign(const Cyclotomic& c);

    std::variant<Rational, Cyclotomic> v_;
};

// Multiplicative order of q as a root of unity: the least m >= 1 with
// q^m = 1, or nullopt when q is not a root of unity. For a cyclotomic value
// with conductor n every root of unity in Q(zeta_n) has order dividing
// lcm(2, n), so one power test plus a divisor scan decides. Throws on q = 0.
std::optional<unsigned long> root_of_unity_order(const Scalar& q);

}  // namespace orex
