#include "orex/classify.hpp"

#include "orex/derivation.hpp"

#include <stdexcept>

namespace orex {

std::optional<unsigned long> sigma_order(const Scalar& q, const Scalar& b) {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    if (q.is_one()) {
        if (b.is_zero()) return 1;
        return std::nullopt;  // sigma^n(x) = x + n*b never returns to x
    }
    return root_of_unity_order(q);
}

const char* normal_form_name(NormalFormKind kind) {
    switch (kind) {
        case NormalFormKind::Polynomial: return "polynomial_ring";
        case NormalFormKind::QuantumPlane: return "quantum_plane";
        case NormalFormKind::QuantumWeyl: return "quantum_weyl";
        case NormalFormKind::DiffOpRing: return "differential_operator_ring";
        case NormalFormKind::Shift: return "shift_algebra";
    }
    throw std::logic_error("unhandled normal form kind");
}

const char* diamond_reason_name(DiamondReason reason) {
    switch (reason) {
        case DiamondReason::RootOfUnity: return "root_of_unity";
        case DiamondReason::QNotRootOfUnity: return "q_not_root_of_unity";
        case DiamondReason::LocallyNilpotent: return "locally_nilpotent";
        case DiamondReason::NotLocallyNilpotent: return "not_locally_nilpotent";
        case DiamondReason::InfiniteOrderShift: return "infinite_order_shift";
    }
    throw std::logic_error("unhandled reason code");
}

namespace {

// q rendered as a multiplicative factor in a relation string.
std::string scalar_factor(const Scalar& s) {
    const std::string text = s.str();
    for (const char ch : text) {
        if (ch == ' ' || ch == '-' || ch == '/') return "(" + text + ")";
    }
    return text;
}

void replay_relation(const DerivationSpec& spec, const NormalForm& nf) {
    const SkewPoly x_new = SkewPoly::from_poly(spec, nf.iso.x_new);
    const SkewPoly& y_new = nf.iso.y_new;
    const SkewPoly lhs = skew_mul(y_new, x_new);
    SkewPoly rhs = skew_mul(x_new, y_new);
    switch (nf.kind) {
        case NormalFormKind::Polynomial:
            break;
        case NormalFormKind::DiffOpRing:
            rhs += SkewPoly::from_poly(spec, nf.dx);
            break;
        case NormalFormKind::QuantumPlane:
            rhs = nf.q * rhs;
            break;
        case NormalFormKind::QuantumWeyl:
            rhs = nf.q * rhs + SkewPoly::from_poly(spec, Poly(1));
            break;
        case NormalFormKind::Shift:
            rhs += y_new;
            break;
    }
    if (lhs != rhs) {
        throw std::logic_error("change of variables failed to reproduce the target relation");
    }
}

}  // namespace

NormalForm normalize(const DerivationSpec& spec) {
    const Scalar one(1);

    if (spec.q.is_one()) {
        if (spec.b.is_zero()) {
            const bool plain = spec.dx.is_zero();
            NormalForm nf{
                plain ? NormalFormKind::Polynomial : NormalFormKind::DiffOpRing,
                one,
                spec.dx,
                IsoData{Poly::x(), SkewPoly::theta(spec), Poly(), Scalar(0),
                        plain ? "y*x = x*y"
                              : (spec.dx.terms().size() > 1
                                     ? "y*x = x*y + (" + spec.dx.str() + ")"
                                     : "y*x = x*y + " + spec.dx.str())},
            };
            replay_relation(spec, nf);
            return nf;
        }

        // Shift: rescale so sigma(x') = x' + 1, then absorb the derivation
        // into the other generator.
        const Scalar binv = spec.b.inverse();
        const Poly correction = Poly(binv) * spec.dx;
        NormalForm nf{
            NormalFormKind::Shift,
            one,
            Poly(),
            IsoData{Poly::monomial(binv, 1), SkewPoly(spec, {correction, Poly(1)}),
                    correction, Scalar(0), "y'*x' = (x' + 1)*y'"},
        };
        replay_relation(spec, nf);
        return nf;
    }

    // q != 1: recentre so sigma scales x' by q, then split d(x') into the
    // multiple of x' it contributes to the relation and a constant r.
    const Scalar c = spec.b * (spec.q - one).inverse();
    const Poly x_new = Poly::x() + Poly(c);
    // d(x') = d(x); rewrite it as a polynomial in x' by substituting x' - c.
    const Poly d_of_xnew = spec.dx.subst(Poly::x() - Poly(c));
    const Scalar r = d_of_xnew.constant_coeff();
    const auto [p, remainder] =
        divmod(d_of_xnew - Poly(r), Poly::monomial(spec.q - one, 1));
    if (!remainder.is_zero()) {
        throw std::logic_error("derivation split left a remainder");
    }

    // y' = y + p(x') straightens the relation to y'x' = qx'y' + r.
    const Poly p_in_x = p.subst(x_new);
    if (r.is_zero()) {
        NormalForm nf{
            NormalFormKind::QuantumPlane,
            spec.q,
            Poly(),
            IsoData{x_new, SkewPoly(spec, {p_in_x, Poly(1)}), p, r,
                    "y'*x' = " + scalar_factor(spec.q) + "*x'*y'"},
        };
        replay_relation(spec, nf);
        return nf;
    }

    const Scalar rinv = r.inverse();
    NormalForm nf{
        NormalFormKind::QuantumWeyl,
        spec.q,
        Poly(),
        IsoData{x_new, SkewPoly(spec, {Poly(rinv) * p_in_x, Poly(rinv)}), p, r,
                "y''*x' = " + scalar_factor(spec.q) + "*x'*y'' + 1"},
    };
    replay_relation(spec, nf);
    return nf;
}

DiamondVerdict decide_diamond(const DerivationSpec& spec) {
    NormalForm nf = normalize(spec);
    const auto order = sigma_order(spec.q, spec.b);

    if (spec.sigma_is_identity()) {
        if (is_locally_nilpotent(spec)) {
            return {true, DiamondReason::LocallyNilpotent, order, std::move(nf),
                    "sigma = id and d(x) is constant, so d is locally nilpotent"};
        }
        return {false, DiamondReason::NotLocallyNilpotent, order, std::move(nf),
                "sigma = id but d(x) is nonconstant, so d is not locally nilpotent"};
    }
    if (spec.q.is_one()) {
        return {false, DiamondReason::InfiniteOrderShift, std::nullopt, std::move(nf),
                "sigma(x) = x + b has infinite order; the extension rewrites as a "
                "shift algebra over K[y'] whose derivation -y'*d/dy' is not locally "
                "nilpotent"};
    }
    if (order) {
        return {true, DiamondReason::RootOfUnity, order, std::move(nf),
                "sigma has finite order " + std::to_string(*order)};
    }
    return {false, DiamondReason::QNotRootOfUnity, std::nullopt, std::move(nf),
            "q is not a root of unity, so sigma has infinite order"};
}

}  // namespace orex
