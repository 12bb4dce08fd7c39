#include "orex/skew.hpp"

#include <sstream>
#include <stdexcept>

namespace orex {

SkewPoly::SkewPoly(DerivationSpec spec, std::vector<Poly> coeffs)
    : spec_(std::move(spec)), c_(std::move(coeffs)) {
    trim();
}

SkewPoly SkewPoly::from_poly(DerivationSpec spec, Poly p) {
    return SkewPoly(std::move(spec), {std::move(p)});
}

SkewPoly SkewPoly::theta(DerivationSpec spec, unsigned power) {
    std::vector<Poly> c(power + 1);
    c[power] = Poly(1);
    return SkewPoly(std::move(spec), std::move(c));
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

const Poly& SkewPoly::coeff(unsigned i) const {
    static const Poly zero;
    return i < c_.size() ? c_[i] : zero;
}

SkewPoly SkewPoly::operator-() const {
    SkewPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
}

namespace {
void require_same_spec(const SkewPoly& f, const SkewPoly& g) {
    if (f.spec() != g.spec()) {
        throw std::invalid_argument("skew polynomials from different Ore extensions");
    }
}
}  // namespace

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    require_same_spec(f, g);
    std::vector<Poly> c(std::max(f.c_.size(), g.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = f.coeff(static_cast<unsigned>(i)) + g.coeff(static_cast<unsigned>(i));
    }
    return SkewPoly(f.spec_, std::move(c));
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
    return f + (-g);
}

SkewPoly operator*(const Poly& p, const SkewPoly& f) {
    std::vector<Poly> c(f.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p * f.c_[i];
    return SkewPoly(f.spec_, std::move(c));
}

SkewPoly operator*(const Scalar& s, const SkewPoly& f) {
    return Poly(s) * f;
}

SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g) {
    require_same_spec(f, g);
    const DerivationSpec& spec = f.spec();
    SkewPoly result(spec);
    if (f.is_zero() || g.is_zero()) return result;

    // theta^k * g, built up one commutation step at a time:
    // theta * (c theta^m) = sigma(c) theta^{m+1} + d(c) theta^m.
    SkewPoly shifted = g;
    for (unsigned k = 0; k <= static_cast<unsigned>(f.theta_degree()); ++k) {
        if (!f.coeff(k).is_zero()) {
            result += f.coeff(k) * shifted;
        }
        if (k == static_cast<unsigned>(f.theta_degree())) break;
        std::vector<Poly> next(shifted.coeffs().size() + 1);
        for (size_t m = 0; m < shifted.coeffs().size(); ++m) {
            const Poly& c = shifted.coeffs()[m];
            if (c.is_zero()) continue;
            next[m + 1] += spec.sigma(c);
            next[m] += spec.d(c);
        }
        shifted = SkewPoly(spec, std::move(next));
    }
    return result;
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
    return skew_mul(f, g);
}

std::vector<Poly> right_normal_form(const SkewPoly& f) {
    const DerivationSpec& spec = f.spec();
    // Horner from the top: r holds the right form of the processed part;
    // multiplying it by theta on the right sends theta^i c to
    // theta^{i+1} sigma^{-1}(c) - theta^i d(sigma^{-1}(c)).
    std::vector<Poly> r;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        std::vector<Poly> next(r.size() + 1);
        for (size_t m = 0; m < r.size(); ++m) {
            if (r[m].is_zero()) continue;
            const Poly s = spec.sigma_inverse(r[m]);
            next[m + 1] += s;
            next[m] -= spec.d(s);
        }
        next[0] += f.coeffs()[i];
        r = std::move(next);
    }
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
}

SkewPoly from_right_form(const DerivationSpec& spec, const std::vector<Poly>& coeffs) {
    SkewPoly result(spec);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        result += skew_mul(SkewPoly::theta(spec, static_cast<unsigned>(i)),
                           SkewPoly::from_poly(spec, coeffs[i]));
    }
    return result;
}

DivisionResult right_divide(const SkewPoly& f, const SkewPoly& g) {
    require_same_spec(f, g);
    if (g.is_zero()) {
        throw std::invalid_argument("division by zero");
    }
    const Poly lead = g.leading_coeff();
    if (!lead.is_constant()) {
        throw std::invalid_argument(
            "divisor must have a unit leading theta-coefficient");
    }
    const Scalar lead_inv = lead.constant_coeff().inverse();
    const DerivationSpec& spec = f.spec();
    const int dg = g.theta_degree();

    SkewPoly quotient(spec);
    SkewPoly rem = f;
    // sigma fixes K, so the leading coefficient of (c theta^k) * g is
    // c * sigma^k(unit) = c * unit and one subtraction kills the top term.
    while (!rem.is_zero() && rem.theta_degree() >= dg) {
        const unsigned shift = static_cast<unsigned>(rem.theta_degree() - dg);
        std::vector<Poly> tc(shift + 1);
        tc[shift] = lead_inv * rem.leading_coeff();
        const SkewPoly t(spec, std::move(tc));
        quotient += t;
        rem -= skew_mul(t, g);
    }
    return {std::move(quotient), std::move(rem)};
}

Poly module_action(const SkewPoly& f, const Poly& p) {
    if (!f.spec().sigma_is_identity()) {
        throw std::invalid_argument("the module action on K[x] requires sigma = id");
    }
    Poly result;
    Poly dp = p;  // d^i(p) as i advances
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (!f.coeffs()[i].is_zero()) {
            result += f.coeffs()[i] * dp;
        }
        if (i + 1 < f.coeffs().size()) {
            dp = f.spec().d(dp);
        }
    }
    return result;
}

std::vector<Scalar> reduce_at(const SkewPoly& f, const Scalar& alpha) {
    std::vector<Poly> right = right_normal_form(f);
    std::vector<Scalar> coords(right.size());
    for (size_t i = 0; i < right.size(); ++i) {
        coords[i] = right[i].eval(alpha);
    }
    while (!coords.empty() && coords.back().is_zero()) coords.pop_back();
    return coords;
}

bool in_theta_point_ideal(const SkewPoly& f, const Scalar& alpha) {
    if (f.is_zero()) return true;
    if (!f.constant_coeff().is_zero()) return false;
    // Strip one theta from the right: f = cofactor * theta exactly when the
    // constant coefficient vanishes.
    std::vector<Poly> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    const SkewPoly cofactor(f.spec(), std::move(shifted));
    return reduce_at(cofactor, alpha).empty();
}

std::string SkewPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Poly& p = c_[i];
        if (p.is_zero()) continue;
        if (i == 0) {
            // The theta^0 part is an ordinary polynomial; splice its terms in.
            std::string s = p.str();
            if (first) {
                os << s;
            } else if (!s.empty() && s[0] == '-') {
                os << " - " << s.substr(1);
            } else {
                os << " + " << s;
            }
            first = false;
            continue;
        }
        // Single monomial coefficients ride along unparenthesized; anything
        // else is wrapped so the output re-parses.
        std::string body;
        bool negative = false;
        if (p.terms().size() == 1) {
            const auto& [e, c] = *p.terms().begin();
            Poly mono = Poly::monomial(c, e);
            std::string ms = mono.str();
            if (!ms.empty() && ms[0] == '-') {
                negative = true;
                ms = ms.substr(1);
            }
            body = (ms == "1") ? "" : ms;
        } else {
            body = "(" + p.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (!body.empty()) os << body << "*";
        os << "t";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

}  // namespace orex
