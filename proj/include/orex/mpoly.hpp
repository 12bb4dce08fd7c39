#pragma once

#include "orex/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace orex {

// Multivariate polynomial over Scalar in variables x1..xn, sparse: a map
// from exponent vector (length nvars, lexicographic key order) to nonzero
// coefficient. All operands of a binary operation must agree on nvars.
class MPoly {
public:
    explicit MPoly(unsigned nvars) : nvars_(nvars) {}
    static MPoly constant(unsigned nvars, const Scalar& c);
    // The variable x_{i+1} (zero-based index i).
    static MPoly variable(unsigned nvars, unsigned i);
    static MPoly monomial(unsigned nvars, std::vector<unsigned> exps, const Scalar& c);

    unsigned nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // requires is_constant()
    int total_degree() const;       // -1 for zero
    const std::map<std::vector<unsigned>, Scalar>& terms() const { return t_; }
    Scalar coeff(const std::vector<unsigned>& e) const;

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const Scalar& c, const MPoly& p);
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator-=(const MPoly& o) { return *this = *this - o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.nvars_ == b.nvars_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    // Terms in descending lexicographic order, e.g. "x1^2*x2 + 1".
    std::string str() const;

private:
    void set(const std::vector<unsigned>& e, Scalar c);
    void check_arity(const MPoly& o) const;

    unsigned nvars_;
    std::map<std::vector<unsigned>, Scalar> t_;
};

}  // namespace orex
