#pragma once

#include "orex/skew.hpp"

#include <optional>
#include <vector>

namespace orex {

// The constructions below all live over S = K[x][theta; d] with identity
// twist, around a point alpha: m = (x - alpha) is the maximal ideal of K[x],
// S m the left ideal it generates, and I = S m theta. Inputs with a
// nontrivial twist are rejected; normalize the extension first.

// Witness that the cyclic submodule generated by `input` meets S theta / I:
// multiplier * input lands in S theta but stays outside I.
struct EssentialWitness {
    SkewPoly multiplier;   // s
    SkewPoly input;        // u
    SkewPoly product;      // s * u, constant coefficient zero, not in I
    unsigned shift_steps;  // power of theta premultiplied before the final step
};

// Produces the witness for u not in I = S(x - alpha)theta, following the
// two-step recipe: premultiply by theta^m until the constant coefficient b
// of the running product has b(alpha) != 0, then premultiply by
// b*theta - d(b), which forces the constant coefficient of the result to
// b*d(b) - d(b)*b = 0 while the reduction modulo S m keeps a nonzero
// coordinate. If u has constant coefficient zero it already lies in S theta
// and s = 1 does the job.
//
// Requires d(x)(alpha) != 0; that makes each application of d drop the order
// of vanishing at alpha by exactly one, so m is at most deg of the constant
// coefficient. Throws std::invalid_argument when u is in I, when
// d(x)(alpha) = 0, or when the twist is not the identity.
EssentialWitness essentialize(const SkewPoly& u, const Scalar& alpha);

// One layer of the descending chain L_j = S f^j + S theta together with the
// commutative facts that place f^j inside L_j and outside L_{j+1}.
struct ChainLink {
    unsigned index;           // j, starting at 1
    Poly element;             // f^j
    Poly stable_generator;    // monic generator of the smallest d-stable ideal containing f^j
    bool strictly_above_next; // f^{j+1} does not divide f^j
};

// A strictly descending chain of left ideals between S and I, certifying
// that S/I is not artinian.
struct ChainCertificate {
    Poly f;        // the derivation image d(x)
    Scalar alpha;
    unsigned length;
    std::vector<ChainLink> links;
};

// Builds the chain L_1 > L_2 > ... > L_k for f = dx. Each ideal (f^j) of
// K[x] is d-stable (d(f^j) = j f' f^j), which pins L_j's intersection with
// K[x] down to (f^j); strictness then reduces to f^{j+1} not dividing f^j.
// Both facts are recomputed exactly for every link and a failure raises
// std::logic_error. Requires dx nonconstant (otherwise no proper d-stable
// ideal exists and the chain degenerates), dx(alpha) != 0, and k >= 1;
// violations raise std::invalid_argument.
ChainCertificate chain_certificate(const Poly& dx, const Scalar& alpha, unsigned k);

// Certificate that S m is a maximal left ideal: a cofactor u with
// u * g = 1 modulo S m, exhibiting that any left ideal strictly above S m
// containing g is all of S.
struct MaximalityCertificate {
    Scalar alpha;
    SkewPoly g;
    SkewPoly cofactor;       // u with u * g = 1 mod S(x - alpha)
    unsigned search_degree;  // total-degree level at which u was found
};

// Searches for the cofactor as u = sum over i + j <= D of l_ij x^i theta^j,
// level by level from D = 0 up to degree_bound, solving the exact linear
// system that the coordinates of x^i theta^j * g modulo S m impose. The
// enumeration order and pivoting are fixed, so results are deterministic.
// Returns the certificate at the first level with a solution (re-verified
// by reduction before returning), or nullopt when every level up to
// degree_bound fails. Throws std::invalid_argument when g lies in S m
// (reduction of g is zero) or the twist is not the identity.
std::optional<MaximalityCertificate> maximality_certificate(const Scalar& alpha,
                                                            const SkewPoly& g,
                                                            unsigned degree_bound);

}  // namespace orex
