#pragma once

#include "orex/mpoly.hpp"

#include <vector>

namespace orex {

// A derivation on K[x1..xn], determined by the images d(x_j). The twist is
// the identity here, so d extends K-linearly by the ordinary Leibniz rule:
// on a monomial, d(x^e) = sum_j e_j x^{e - delta_j} d(x_j).
struct MultiDerivation {
    explicit MultiDerivation(std::vector<MPoly> images);

    std::vector<MPoly> images;

    unsigned nvars() const { return static_cast<unsigned>(images.size()); }
    MPoly d(const MPoly& p) const;
};

// Outcome of the local-nilpotency check. Triangular and Nilpotent are proofs
// that d is locally nilpotent; NotNilpotentWithinBound only reports that the
// search gave up, not that d fails to be locally nilpotent.
struct LocalNilpotency {
    enum class Kind { Triangular, Nilpotent, NotNilpotentWithinBound };

    Kind kind;
    // Triangular: zero-based variable indices ordered so that the image of
    // each variable involves only variables listed before it.
    std::vector<unsigned> order;
    // Nilpotent: least m with d^m(x_j) = 0 for every generator x_j.
    unsigned max_iterations = 0;

    bool certified() const { return kind != Kind::NotNilpotentWithinBound; }
};

// Decides local nilpotency of d as far as an elementary search can. First a
// greedy pass looks for a triangular variable order (greedy choice is
// complete for that criterion: if any admissible order exists, at every step
// the least not-yet-chosen variable of that order is still choosable).
// Failing that, d is iterated on the generators up to `bound` steps; if all
// iterates vanish the derivation is nilpotent on generators, which forces
// local nilpotency (a length-N derivative of a product of k generators
// distributes N applications over k factors, so some factor receives enough
// to die). bound must be positive.
LocalNilpotency check_locally_nilpotent(const MultiDerivation& d, unsigned bound);

// The Lie algebra attached to a locally nilpotent derivation: h is the span
// of the iterated images V = {d^i(x_j) : i >= 0} \ {0}, and g = h + K*theta
// carries the bracket [theta, v] = d(v), [h, h] = 0.
struct LieDatum {
    std::vector<MPoly> v_set;    // the distinct nonzero iterates d^i(x_j)
    std::vector<MPoly> basis_h;  // subset of v_set forming a basis of span(v_set)
    unsigned nilpotency_class;   // largest c with gamma_c(g) != 0

    unsigned dim_h() const { return static_cast<unsigned>(basis_h.size()); }
    unsigned dim_g() const { return dim_h() + 1; }
};

// Computes V, a basis of h, and the nilpotency class of g through the lower
// central series: gamma_2 = span d(h) and gamma_{k+1} = span d(gamma_k),
// because every bracket against h vanishes and only theta acts. Requires
// check_locally_nilpotent to certify d within `bound`; throws
// std::invalid_argument otherwise.
LieDatum lie_datum(const MultiDerivation& d, unsigned bound);

// Checks, on the two-variable ring R = K[x1, x2] with d = d/dx1 (so the
// constants of d are K[x2]), that contraction and extension are mutually
// inverse between the principal ideal g*K[x2] and the ideal R*g it
// generates:
//
//   (a) a polynomial in x2 alone lies in R*g exactly when g divides it in
//       K[x2], checked on a deterministic sample;
//   (b) the x1-free layer of R*g has greatest common divisor g again.
//
// g must be a nonzero polynomial in x2 alone; throws std::invalid_argument
// otherwise. Returns true when every sampled check passes.
bool verify_lattice_iso_principal(const MPoly& g);

}  // namespace orex
