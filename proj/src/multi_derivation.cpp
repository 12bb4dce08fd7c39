#include "orex/multi_derivation.hpp"

#include "orex/linalg.hpp"
#include "orex/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>

namespace orex {

MultiDerivation::MultiDerivation(std::vector<MPoly> imgs) : images(std::move(imgs)) {
    if (images.empty()) {
        throw std::invalid_argument("a derivation needs at least one variable");
    }
    for (const auto& p : images) {
        if (p.nvars() != nvars()) {
            throw std::invalid_argument("derivation image has the wrong number of variables");
        }
    }
}

MPoly MultiDerivation::d(const MPoly& p) const {
    if (p.nvars() != nvars()) {
        throw std::invalid_argument("polynomial has the wrong number of variables");
    }
    MPoly out(nvars());
    for (const auto& [e, c] : p.terms()) {
        for (unsigned j = 0; j < nvars(); ++j) {
            if (e[j] == 0 || images[j].is_zero()) continue;
            std::vector<unsigned> e2 = e;
            --e2[j];
            out += MPoly::monomial(nvars(), std::move(e2),
                                   c * Scalar(static_cast<long>(e[j]))) *
                   images[j];
        }
    }
    return out;
}

namespace {

bool uses_only(const MPoly& p, const std::vector<bool>& allowed) {
    for (const auto& [e, c] : p.terms()) {
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] > 0 && !allowed[k]) return false;
        }
    }
    return true;
}

}  // namespace

LocalNilpotency check_locally_nilpotent(const MultiDerivation& d, unsigned bound) {
    if (bound == 0) throw std::invalid_argument("iteration bound must be positive");

    const unsigned n = d.nvars();
    std::vector<bool> chosen(n, false);
    std::vector<unsigned> order;
    while (order.size() < n) {
        bool progress = false;
        for (unsigned j = 0; j < n; ++j) {
            if (!chosen[j] && uses_only(d.images[j], chosen)) {
                chosen[j] = true;
                order.push_back(j);
                progress = true;
                break;
            }
        }
        if (!progress) break;
    }
    if (order.size() == n) {
        return {LocalNilpotency::Kind::Triangular, std::move(order), 0};
    }

    std::vector<MPoly> iter = d.images;  // holds d^m of each generator
    for (unsigned m = 1; m <= bound; ++m) {
        if (std::all_of(iter.begin(), iter.end(),
                        [](const MPoly& p) { return p.is_zero(); })) {
            return {LocalNilpotency::Kind::Nilpotent, {}, m};
        }
        for (auto& p : iter) p = d.d(p);
    }
    return {LocalNilpotency::Kind::NotNilpotentWithinBound, {}, 0};
}

LieDatum lie_datum(const MultiDerivation& d, unsigned bound) {
    if (!check_locally_nilpotent(d, bound).certified()) {
        throw std::invalid_argument(
            "derivation was not certified locally nilpotent within the iteration bound");
    }

    // Every nonzero iterate d^i(x_j), deduplicated across the per-generator
    // chains. Each chain terminates because d is locally nilpotent; the cap
    // only guards against an internal inconsistency.
    constexpr unsigned kChainCap = 1000;
    const unsigned n = d.nvars();
    std::vector<MPoly> v_set;
    for (unsigned j = 0; j < n; ++j) {
        MPoly p = MPoly::variable(n, j);
        unsigned steps = 0;
        while (!p.is_zero()) {
            if (std::find(v_set.begin(), v_set.end(), p) == v_set.end()) {
                v_set.push_back(p);
            }
            p = d.d(p);
            if (++steps > kChainCap) {
                throw std::logic_error("iterate chain of a generator failed to terminate");
            }
        }
    }

    // Span computations use dense coordinates over the monomials occurring in
    // V; iterates of V elements are again V elements (or zero), so every
    // vector met below stays inside this coordinate space.
    std::map<std::vector<unsigned>, size_t> coord;
    for (const auto& p : v_set) {
        for (const auto& [e, c] : p.terms()) coord.emplace(e, coord.size());
    }
    auto to_vec = [&coord](const MPoly& p) {
        Vec v(coord.size(), Scalar(0));
        for (const auto& [e, c] : p.terms()) {
            const auto it = coord.find(e);
            if (it == coord.end()) {
                throw std::logic_error("iterate left the span of the collected monomials");
            }
            v[it->second] = c;
        }
        return v;
    };

    RowSpace h_space;
    std::vector<MPoly> basis_h;
    for (const auto& p : v_set) {
        if (h_space.insert(to_vec(p))) basis_h.push_back(p);
    }

    // Lower central series of g = h + K*theta. Brackets inside h vanish, so
    // gamma_2 = span d(h) and each further layer is the span of d applied to
    // the previous one; the class is the last index with a nonzero layer.
    unsigned cls = 1;
    std::vector<MPoly> layer = basis_h;
    while (!layer.empty()) {
        RowSpace next_space;
        std::vector<MPoly> next;
        for (const auto& p : layer) {
            MPoly dp = d.d(p);
            if (!dp.is_zero() && next_space.insert(to_vec(dp))) next.push_back(std::move(dp));
        }
        if (next.empty()) break;
        ++cls;
        if (cls > kChainCap) {
            throw std::logic_error("lower central series failed to terminate");
        }
        layer = std::move(next);
    }

    return {std::move(v_set), std::move(basis_h), cls};
}

namespace {

// Repackage a polynomial involving only x2 as a univariate polynomial.
Poly univariate_in_x2(const MPoly& p) {
    Poly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] != 0) {
            throw std::invalid_argument("generator must be a polynomial in x2 alone");
        }
        out += Poly::monomial(c, e[1]);
    }
    return out;
}

MPoly embed_x2(const Poly& p) {
    MPoly out(2);
    for (const auto& [e, c] : p.terms()) {
        out += MPoly::monomial(2, {0u, e}, c);
    }
    return out;
}

// Membership of p in the ideal generated by g over K[x1, x2] for g in K[x2]:
// split p into coefficients of the powers of x1 and test each for
// divisibility by g.
bool in_extended_ideal(const MPoly& p, const Poly& g) {
    std::map<unsigned, Poly> layers;
    for (const auto& [e, c] : p.terms()) {
        layers[e[0]] += Poly::monomial(c, e[1]);
    }
    for (const auto& [xdeg, layer] : layers) {
        if (!divides(g, layer)) return false;
    }
    return true;
}

Poly random_x2_poly(std::mt19937_64& rng, unsigned max_degree) {
    std::uniform_int_distribution<long> coeff(-6, 6);
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    Poly p;
    const unsigned top = deg(rng);
    for (unsigned e = 0; e <= top; ++e) {
        p += Poly::monomial(Scalar(coeff(rng)), e);
    }
    return p;
}

}  // namespace

bool verify_lattice_iso_principal(const MPoly& g) {
    if (g.nvars() != 2) {
        throw std::invalid_argument("expected a polynomial in K[x1, x2]");
    }
    if (g.is_zero()) {
        throw std::invalid_argument("generator must be nonzero");
    }
    const Poly gy = univariate_in_x2(g);

    std::mt19937_64 rng(9001u);

    // Contraction: an x1-free polynomial lies in the extended ideal exactly
    // when g divides it in K[x2].
    for (int round = 0; round < 40; ++round) {
        const Poly h = random_x2_poly(rng, 6);
        if (in_extended_ideal(embed_x2(h), gy) != divides(gy, h)) return false;
        if (!in_extended_ideal(embed_x2(h * gy), gy)) return false;
    }

    // Extension: the x1-free layer of the extended ideal is generated by g
    // again, so the gcd of sampled x1-free members recovers g up to a unit.
    Poly acc;
    for (unsigned k = 0; k <= 6; ++k) acc = gcd(acc, gy * Poly::x(k));
    for (int round = 0; round < 10; ++round) {
        const Poly mult = gy * random_x2_poly(rng, 3);
        if (!in_extended_ideal(embed_x2(mult), gy)) return false;
        acc = gcd(acc, mult);
    }
    return acc == gy.monic();
}

}  // namespace orex
