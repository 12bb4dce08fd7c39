#include "orex/scalar.hpp"

#include <numeric>
#include <stdexcept>

namespace orex {

void Scalar::assign(const Cyclotomic& c) {
    if (c.is_rational()) {
        v_ = c.rational_value();
    } else {
        v_ = c;
    }
}

unsigned Scalar::conductor() const {
    return is_rational() ? 0 : std::get<Cyclotomic>(v_).conductor();
}

const Rational& Scalar::rational() const {
    return std::get<Rational>(v_);
}

const Cyclotomic& Scalar::cyclotomic() const {
    return std::get<Cyclotomic>(v_);
}

bool Scalar::is_zero() const {
    return is_rational() && std::get<Rational>(v_).is_zero();
}

bool Scalar::is_one() const {
    return is_rational() && std::get<Rational>(v_).is_one();
}

Scalar Scalar::operator-() const {
    if (is_rational()) return Scalar(-std::get<Rational>(v_));
    return Scalar(-std::get<Cyclotomic>(v_));
}

namespace {

// Lifts both operands into a common field. Rational values are promoted to
// the other operand's conductor; two distinct conductors are an error.
std::pair<Cyclotomic, Cyclotomic> promote(const Scalar& a, const Scalar& b) {
    const unsigned ca = a.conductor();
    const unsigned cb = b.conductor();
    if (ca != 0 && cb != 0 && ca != cb) {
        throw std::invalid_argument("cannot mix values from Q(zeta(" + std::to_string(ca) +
                                    ")) and Q(zeta(" + std::to_string(cb) + "))");
    }
    const unsigned n = ca != 0 ? ca : cb;
    Cyclotomic x = a.is_rational() ? Cyclotomic::from_rational(n, a.rational()) : a.cyclotomic();
    Cyclotomic y = b.is_rational() ? Cyclotomic::from_rational(n, b.rational()) : b.cyclotomic();
    return {std::move(x), std::move(y)};
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
    auto [x, y] = promote(a, b);
    return Scalar(x + y);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() - b.rational());
    auto [x, y] = promote(a, b);
    return Scalar(x - y);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
    auto [x, y] = promote(a, b);
    return Scalar(x * y);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_rational() != b.is_rational()) return false;
    if (a.is_rational()) return a.rational() == b.rational();
    return a.cyclotomic() == b.cyclotomic();
}

Scalar Scalar::inverse() const {
    if (is_rational()) return Scalar(std::get<Rational>(v_).inverse());
    return Scalar(std::get<Cyclotomic>(v_).inverse());
}

Scalar Scalar::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Scalar base = *this;
    Scalar acc(1);
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (is_rational()) return std::get<Rational>(v_).str();
    return std::get<Cyclotomic>(v_).str();
}

std::optional<unsigned long> root_of_unity_order(const Scalar& q) {
    if (q.is_zero()) {
        throw std::domain_error("zero is not a root of unity candidate");
    }
    if (q.is_rational()) {
        if (q.is_one()) return 1;
        if (q.rational() == Rational(-1)) return 2;
        return std::nullopt;
    }
    const unsigned n = q.conductor();
    const unsigned long bound = std::lcm<unsigned long>(2, n);
    if (q.pow(static_cast<long>(bound)) != Scalar(1)) {
        return std::nullopt;
    }
    for (unsigned d : Cyclotomic::divisors(static_cast<unsigned>(bound))) {
        if (q.pow(d) == Scalar(1)) {
            return d;
        }
    }
    throw std::logic_error("root of unity order: divisor scan found no order");
}

}  // namespace orex
