#pragma once

#include "orex/derivation.hpp"

#include <string>
#include <vector>

namespace orex {

// Element of the Ore extension S = K[x][theta; sigma, d] determined by a
// DerivationSpec: the free left K[x]-module on the powers of theta, with
// multiplication generated by the commutation rule
//
//   theta * a = sigma(a) * theta + d(a)        (a in K[x]).
//
// Values are stored in left normal form sum_i a_i(x) * theta^i (coefficients
// on the left). Binary operations require both operands to carry the same
// DerivationSpec.
class SkewPoly {
public:
    explicit SkewPoly(DerivationSpec spec) : spec_(std::move(spec)) {}
    SkewPoly(DerivationSpec spec, std::vector<Poly> coeffs);
    static SkewPoly from_poly(DerivationSpec spec, Poly p);
    static SkewPoly theta(DerivationSpec spec, unsigned power = 1);

    const DerivationSpec& spec() const { return spec_; }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero element (standing in for minus infinity).
    int theta_degree() const { return static_cast<int>(c_.size()) - 1; }
    // Left coefficient of theta^i (zero when absent).
    const Poly& coeff(unsigned i) const;
    const std::vector<Poly>& coeffs() const { return c_; }
    Poly leading_coeff() const { return c_.empty() ? Poly() : c_.back(); }
    Poly constant_coeff() const { return coeff(0); }

    SkewPoly operator-() const;
    friend SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
    friend SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
    friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);
    friend SkewPoly operator*(const Poly& p, const SkewPoly& f);
    friend SkewPoly operator*(const Scalar& c, const SkewPoly& f);
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
        return f.spec_ == g.spec_ && f.c_ == g.c_;
    }
    friend bool operator!=(const SkewPoly& f, const SkewPoly& g) { return !(f == g); }

    // Left normal form with theta spelled "t", descending powers, e.g.
    // "(x^2 - 1)*t^2 + x*t + 3".
    std::string str() const;

private:
    void trim();

    DerivationSpec spec_;
    std::vector<Poly> c_;  // c_[i] * theta^i, no trailing zero entries
};

// Product computed by iterating the single commutation step; no closed-form
// shortcuts, so it is valid for every sigma.
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);

// Right normal form: coefficients c_i with f = sum_i theta^i * c_i, via the
// inverse commutation rule a * theta = theta * sigma^{-1}(a) -
// d(sigma^{-1}(a)). Index i holds the coefficient of theta^i.
std::vector<Poly> right_normal_form(const SkewPoly& f);

// Rebuilds sum_i theta^i * c_i from right-form coefficients.
SkewPoly from_right_form(const DerivationSpec& spec, const std::vector<Poly>& coeffs);

struct DivisionResult {
    SkewPoly quotient;
    SkewPoly remainder;
};

// Division on the right by g: f = quotient * g + remainder with
// theta-deg(remainder) < theta-deg(g). The leading theta-coefficient of g
// must be a nonzero constant (a unit of K[x]); otherwise the leading terms
// cannot be cancelled and the call throws std::invalid_argument.
DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g);

// Natural action of S on R = K[x] through theta acting as d (requires
// sigma = id): (sum_i a_i theta^i) . p = sum_i a_i d^i(p).
Poly module_action(const SkewPoly& f, const Poly& p);

// Coordinates of f modulo the left ideal S*(x - alpha): reducing the right
// normal form coefficients at alpha gives canonical coordinates in the
// quotient, which is a K-vector space on the images of the theta powers.
// Trailing zeros are trimmed; f lies in the ideal iff the result is empty.
std::vector<Scalar> reduce_at(const SkewPoly& f, const Scalar& alpha);

// Membership in the left ideal S*(x - alpha)*theta: f must be a left
// multiple of theta (zero constant coefficient) whose cofactor reduces to
// zero at alpha.
bool in_theta_point_ideal(const SkewPoly& f, const Scalar& alpha);

}  // namespace orex
