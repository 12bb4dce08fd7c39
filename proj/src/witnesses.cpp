#include "orex/witnesses.hpp"

#include "orex/derivation.hpp"
#include "orex/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace orex {

namespace {

void require_identity_twist(const DerivationSpec& spec, const char* who) {
    if (!spec.sigma_is_identity()) {
        throw std::invalid_argument(std::string(who) +
                                    " requires sigma = id; normalize the extension first");
    }
}

}  // namespace

EssentialWitness essentialize(const SkewPoly& u, const Scalar& alpha) {
    const DerivationSpec& spec = u.spec();
    require_identity_twist(spec, "essentialize");
    if (spec.dx.eval(alpha).is_zero()) {
        throw std::invalid_argument(
            "d(x) vanishes at alpha, so (x - alpha) generates a d-stable ideal and no "
            "essential multiplier exists");
    }
    if (in_theta_point_ideal(u, alpha)) {
        throw std::invalid_argument("input already lies in S(x - alpha)theta");
    }

    const Poly& a0 = u.constant_coeff();
    if (a0.is_zero()) {
        // u sits in S theta already and stays outside I by assumption.
        return {SkewPoly::from_poly(spec, Poly(1)), u, u, 0};
    }

    // d drops the order of vanishing at alpha by exactly one (d(x)(alpha) is
    // a unit), so this scan stops after at most deg(a0) steps.
    unsigned m = 0;
    Poly h = a0;
    while (h.eval(alpha).is_zero()) {
        h = spec.d(h);
        if (++m > static_cast<unsigned>(a0.degree()) + 1) {
            throw std::logic_error("order of vanishing scan failed to terminate");
        }
    }

    const SkewPoly shifted = skew_mul(SkewPoly::theta(spec, m), u);
    const Poly& b = shifted.constant_coeff();
    // b = d^m(a0) with b(alpha) != 0; the multiplier b*theta - d(b) cancels
    // the constant coefficient of `shifted` exactly.
    const SkewPoly step(spec, {-spec.d(b), b});
    const SkewPoly s = skew_mul(step, SkewPoly::theta(spec, m));
    const SkewPoly product = skew_mul(step, shifted);

    if (!product.constant_coeff().is_zero() || in_theta_point_ideal(product, alpha)) {
        throw std::logic_error("essential multiplier failed re-verification");
    }
    return {s, u, product, m};
}

ChainCertificate chain_certificate(const Poly& dx, const Scalar& alpha, unsigned k) {
    if (dx.degree() < 1) {
        throw std::invalid_argument(
            "d(x) must be nonconstant: otherwise K[x] has no chain of proper nonzero "
            "d-stable ideals");
    }
    if (dx.eval(alpha).is_zero()) {
        throw std::invalid_argument("alpha must not be a root of d(x)");
    }
    if (k == 0) {
        throw std::invalid_argument("chain length must be positive");
    }

    const DerivationSpec spec(Scalar(1), Scalar(0), dx);
    ChainCertificate cert{dx, alpha, k, {}};
    Poly power(1);
    for (unsigned j = 1; j <= k; ++j) {
        power *= dx;  // f^j
        const Poly closure = d_ideal_closure(power, spec);
        if (closure != power.monic()) {
            throw std::logic_error("chain element generates a non-d-stable ideal");
        }
        const bool strict = !divides(power * dx, power);
        if (!strict) {
            throw std::logic_error("chain failed to descend strictly");
        }
        cert.links.push_back({j, power, closure, strict});
    }
    return cert;
}

std::optional<MaximalityCertificate> maximality_certificate(const Scalar& alpha,
                                                            const SkewPoly& g,
                                                            unsigned degree_bound) {
    const DerivationSpec& spec = g.spec();
    require_identity_twist(spec, "maximality_certificate");
    if (reduce_at(g, alpha).empty()) {
        throw std::invalid_argument(
            "g lies in S(x - alpha), so no cofactor can reach 1 modulo it");
    }

    for (unsigned level = 0; level <= degree_bound; ++level) {
        // Coordinates of x^i theta^j * g modulo S(x - alpha), one column per
        // monomial, enumerated in a fixed order.
        std::vector<std::pair<unsigned, unsigned>> monomials;
        for (unsigned j = 0; j <= level; ++j) {
            for (unsigned i = 0; i + j <= level; ++i) monomials.emplace_back(i, j);
        }

        std::vector<std::vector<Scalar>> columns;
        size_t rows = 1;
        columns.reserve(monomials.size());
        for (const auto& [i, j] : monomials) {
            std::vector<Poly> coeffs(j + 1);
            coeffs[j] = Poly::x(i);
            columns.push_back(reduce_at(skew_mul(SkewPoly(spec, std::move(coeffs)), g), alpha));
            rows = std::max(rows, columns.back().size());
        }

        Mat a(rows, Vec(columns.size(), Scalar(0)));
        for (size_t c = 0; c < columns.size(); ++c) {
            for (size_t r = 0; r < columns[c].size(); ++r) a[r][c] = columns[c][r];
        }
        Vec target(rows, Scalar(0));
        target[0] = Scalar(1);

        const auto solution = solve(a, target);
        if (!solution) continue;

        std::vector<Poly> coeffs(level + 1);
        for (size_t c = 0; c < monomials.size(); ++c) {
            if ((*solution)[c].is_zero()) continue;
            coeffs[monomials[c].second] += Poly::monomial((*solution)[c], monomials[c].first);
        }
        SkewPoly u(spec, std::move(coeffs));

        if (reduce_at(skew_mul(u, g), alpha) != std::vector<Scalar>{Scalar(1)}) {
            throw std::logic_error("maximality cofactor failed re-verification");
        }
        return MaximalityCertificate{alpha, g, std::move(u), level};
    }
    return std::nullopt;
}

}  // namespace orex
