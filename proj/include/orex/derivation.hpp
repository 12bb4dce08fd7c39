#pragma once

#include "orex/poly.hpp"

#include <optional>

namespace orex {

// A skew derivation datum on K[x]: the automorphism sigma(x) = q*x + b with
// q != 0, together with the image dx = d(x). d extends to all of K[x] as the
// unique sigma-derivation, i.e. K-linearly with d(uv) = sigma(u) d(v) +
// d(u) v; on powers this unrolls to
//
//   d(x^n) = sum_{i=0}^{n-1} sigma(x)^i * dx * x^{n-1-i}.
//
// With q = 1, b = 0 this is an ordinary derivation d = dx * d/dx.
struct DerivationSpec {
    DerivationSpec() : q(1), b(0) {}
    DerivationSpec(Scalar q, Scalar b, Poly dx);

    Scalar q, b;
    Poly dx;

    bool sigma_is_identity() const { return q.is_one() && b.is_zero(); }

    Poly sigma(const Poly& p) const;
    Poly sigma_inverse(const Poly& p) const;
    Poly d(const Poly& p) const;

    friend bool operator==(const DerivationSpec& a, const DerivationSpec& b) {
        return a.q == b.q && a.b == b.b && a.dx == b.dx;
    }
    friend bool operator!=(const DerivationSpec& a, const DerivationSpec& b) {
        return !(a == b);
    }
};

// Whether d is locally nilpotent on K[x] (every element is annihilated by
// some power of d). In characteristic zero with sigma = id this holds
// exactly when dx is constant. Requires sigma = id.
bool is_locally_nilpotent(const DerivationSpec& d);

// Monic generator of the smallest d-stable ideal of K[x] containing g,
// computed by iterating h <- gcd(h, d(h)) until it stabilizes. K[x] is a
// principal ideal domain, so the chain of generators terminates; the result
// divides g and divides its own image under d. Returns 0 for g = 0.
// Requires sigma = id.
Poly d_ideal_closure(const Poly& g, const DerivationSpec& d);

// Whether K[x] has no d-stable ideal other than 0 and the whole ring. In
// characteristic zero this holds exactly when dx is a nonzero constant.
// Requires sigma = id.
bool is_d_simple(const DerivationSpec& d);

// Least alpha in {0, 1, 2, ...} with f(alpha) != 0, or nullopt for f = 0.
// Such a point has f not in the maximal ideal (x - alpha), which is the
// hypothesis the witness constructions below need.
std::optional<Scalar> d_primitive_witness(const Poly& f);

}  // namespace orex
