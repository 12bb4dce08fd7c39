#pragma once

#include "orex/skew.hpp"

#include <optional>
#include <string>

namespace orex {

// Order of the automorphism sigma(x) = q*x + b of K[x]: 1 for the identity,
// absent for the infinite-order shift (q = 1, b != 0), and otherwise the
// multiplicative order of q when finite (sigma^n(x) = q^n x + (q^n - 1)
// (q - 1)^{-1} b, so only the order of q matters). q must be nonzero.
std::optional<unsigned long> sigma_order(const Scalar& q, const Scalar& b);

enum class NormalFormKind {
    Polynomial,    // y*x = x*y
    QuantumPlane,  // y'*x' = q*x'*y'
    QuantumWeyl,   // y''*x' = q*x'*y'' + 1
    DiffOpRing,    // y*x = x*y + d(x)
    Shift,         // y'*x' = (x' + 1)*y'
};

const char* normal_form_name(NormalFormKind kind);

// Change of variables turning K[x][y; sigma, d] into its normal form, with
// enough data to replay the target's defining relation inside the original
// ring: x_new and y_new are the new generators expressed in the old ones.
struct IsoData {
    Poly x_new;
    SkewPoly y_new;
    Poly p;                // correction polynomial added to y (zero when unused)
    Scalar r;              // constant split off d(x_new) (zero when unused)
    std::string relation;  // the defining relation y_new, x_new were checked against
};

struct NormalForm {
    NormalFormKind kind;
    Scalar q;     // twist parameter of the target; 1 for untwisted kinds
    Poly dx;      // derivation image of the target; zero except DiffOpRing
    IsoData iso;
};

// Classifies the extension by the case split on (q, b, dx):
//
//   q != 1: recentre at x' = x + b(q - 1)^{-1} so sigma(x') = q*x'. Write
//     d(x') = p(x')(q - 1)x' + r with r the constant term; with
//     y' = y + p(x') the relation becomes y'x' = qx'y' + r, giving a quantum
//     plane when r = 0 and, after scaling y'' = r^{-1} y', a quantum Weyl
//     algebra when r != 0.
//   q = 1, b = 0: the commutative polynomial ring when dx = 0, otherwise a
//     differential operator ring, unchanged.
//   q = 1, b != 0: rescale x' = b^{-1} x and absorb the derivation into
//     y' = y + b^{-1} d(x), leaving the pure shift relation
//     y'x' = (x' + 1)y'.
//
// The returned IsoData has been replayed: the product y_new * x_new was
// recomputed in the original ring and compared against the target relation,
// and a mismatch raises std::logic_error.
NormalForm normalize(const DerivationSpec& spec);

enum class DiamondReason {
    RootOfUnity,         // q != 1 of finite multiplicative order
    QNotRootOfUnity,     // q != 1 of infinite multiplicative order
    LocallyNilpotent,    // sigma = id and d(x) constant
    NotLocallyNilpotent, // sigma = id and d(x) nonconstant
    InfiniteOrderShift,  // q = 1, b != 0
};

const char* diamond_reason_name(DiamondReason reason);

// Verdict on whether every essential extension of a simple left module over
// the extension ring is artinian.
struct DiamondVerdict {
    bool satisfied;
    DiamondReason reason;
    std::optional<unsigned long> order;  // finite order of sigma, when it has one
    NormalForm normal_form;
    std::string note;  // one-line explanation of the reason code
};

// Decides the property from the shape of sigma and d: satisfied exactly when
// sigma has finite order, or sigma = id and d is locally nilpotent. The
// infinite-order shift (q = 1, b != 0) fails the property even when dx is
// constant: the shift normal form is a twisted extension over K[y'] whose
// derivation -y' d/dy' is not locally nilpotent, and the note spells that
// out.
DiamondVerdict decide_diamond(const DerivationSpec& spec);

}  // namespace orex
