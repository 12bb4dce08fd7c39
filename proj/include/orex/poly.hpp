#pragma once

#include "orex/scalar.hpp"

#include <map>
#include <string>
#include <utility>

namespace orex {

// Univariate polynomial over Scalar, sparse: a map from exponent to nonzero
// coefficient. The zero polynomial has an empty map and degree() == -1
// (standing in for degree minus infinity; callers test is_zero() before
// doing degree arithmetic).
class Poly {
public:
    Poly() = default;
    Poly(long n);
    Poly(const Scalar& c);
    static Poly monomial(const Scalar& c, unsigned e);
    static Poly x(unsigned e = 1) { return monomial(Scalar(1), e); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
    int degree() const { return t_.empty() ? -1 : static_cast<int>(t_.rbegin()->first); }

    // Coefficient of x^e (zero when absent).
    Scalar coeff(unsigned e) const;
    Scalar leading_coeff() const { return t_.empty() ? Scalar(0) : t_.rbegin()->second; }
    Scalar constant_coeff() const { return coeff(0); }
    const std::map<unsigned, Scalar>& terms() const { return t_; }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& p);
    friend Poly operator*(const Poly& p, const Scalar& c) { return c * p; }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Scaled to leading coefficient 1; monic of zero is zero.
    Poly monic() const;

    Scalar eval(const Scalar& a) const;

    // Composition p(u).
    Poly subst(const Poly& u) const;

    // Terms in descending degree, e.g. "3/2*x^2 - x + 1"; cyclotomic
    // coefficients are parenthesized so the output re-parses.
    std::string str() const;

private:
    void set(unsigned e, Scalar c);

    std::map<unsigned, Scalar> t_;
};

// Division with remainder over the coefficient field: f = q*g + r with
// deg r < deg g. Throws std::domain_error when g is zero.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);

bool divides(const Poly& g, const Poly& f);

// Quotient of an exact division; throws std::invalid_argument when the
// remainder is nonzero.
Poly exact_div(const Poly& f, const Poly& g);

// Monic greatest common divisor; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

}  // namespace orex
