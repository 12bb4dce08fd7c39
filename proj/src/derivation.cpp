#include "orex/derivation.hpp"

#include <stdexcept>
#include <vector>

namespace orex {

DerivationSpec::DerivationSpec(Scalar q_, Scalar b_, Poly dx_)
    : q(std::move(q_)), b(std::move(b_)), dx(std::move(dx_)) {
    if (q.is_zero()) {
        throw std::invalid_argument("sigma(x) = q*x + b needs q != 0");
    }
}

Poly DerivationSpec::sigma(const Poly& p) const {
    if (sigma_is_identity()) return p;
    const Poly image = Poly::monomial(q, 1) + Poly(b);
    return p.subst(image);
}

Poly DerivationSpec::sigma_inverse(const Poly& p) const {
    if (sigma_is_identity()) return p;
    // sigma^{-1}(x) = (x - b) / q.
    const Scalar qi = q.inverse();
    const Poly image = Poly::monomial(qi, 1) + Poly(-(qi * b));
    return p.subst(image);
}

Poly DerivationSpec::d(const Poly& p) const {
    if (p.is_zero() || p.is_constant()) return Poly();
    // Images of the powers via d(x^k) = sigma(x) d(x^{k-1}) + dx * x^{k-1}.
    const unsigned top = static_cast<unsigned>(p.degree());
    const Poly sigma_x = Poly::monomial(q, 1) + Poly(b);
    std::vector<Poly> image(top + 1);
    for (unsigned k = 1; k <= top; ++k) {
        image[k] = sigma_x * image[k - 1] + dx * Poly::x(k - 1);
    }
    Poly r;
    for (const auto& [e, c] : p.terms()) {
        if (e == 0) continue;
        r += c * image[e];
    }
    return r;
}

namespace {
void require_identity_sigma(const DerivationSpec& d, const char* what) {
    if (!d.sigma_is_identity()) {
        throw std::invalid_argument(std::string(what) +
                                    " requires sigma = id; normalize the extension first");
    }
}
}  // namespace

bool is_locally_nilpotent(const DerivationSpec& d) {
    require_identity_sigma(d, "local nilpotency test");
    return d.dx.is_constant();
}

Poly d_ideal_closure(const Poly& g, const DerivationSpec& d) {
    require_identity_sigma(d, "d-stable closure");
    if (g.is_zero()) return Poly();
    Poly h = g.monic();
    while (true) {
        Poly next = gcd(h, d.d(h));
        if (next == h) return h;
        h = std::move(next);
    }
}

bool is_d_simple(const DerivationSpec& d) {
    require_identity_sigma(d, "d-simplicity test");
    return d.dx.is_constant() && !d.dx.is_zero();
}

std::optional<Scalar> d_primitive_witness(const Poly& f) {
    if (f.is_zero()) return std::nullopt;
    // f has at most deg f roots, so the scan stops within deg f + 1 steps.
    for (long k = 0;; ++k) {
        const Scalar alpha{Rational(k)};
        if (!f.eval(alpha).is_zero()) return alpha;
    }
}

}  // namespace orex
