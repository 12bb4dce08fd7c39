#include "orex/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace orex {

Poly::Poly(long n) {
    set(0, Scalar(n));
}

Poly::Poly(const Scalar& c) {
    set(0, c);
}

Poly Poly::monomial(const Scalar& c, unsigned e) {
    Poly p;
    p.set(e, c);
    return p;
}

void Poly::set(unsigned e, Scalar c) {
    if (c.is_zero()) {
        t_.erase(e);
    } else {
        t_[e] = std::move(c);
    }
}

Scalar Poly::coeff(unsigned e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar(0) : it->second;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.t_) {
        r.set(e, r.coeff(e) + c);
    }
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b.t_) {
        r.set(e, r.coeff(e) - c);
    }
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            r.set(ea + eb, r.coeff(ea + eb) + ca * cb);
        }
    }
    return r;
}

Poly operator*(const Scalar& c, const Poly& p) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.t_) {
        r.set(e, c * pc);
    }
    return r;
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return leading_coeff().inverse() * *this;
}

Scalar Poly::eval(const Scalar& a) const {
    // Sparse Horner over descending exponents.
    Scalar acc(0);
    unsigned prev = 0;
    bool started = false;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!started) {
            acc = it->second;
            started = true;
        } else {
            acc = acc * a.pow(static_cast<long>(prev - it->first)) + it->second;
        }
        prev = it->first;
    }
    if (!started) return Scalar(0);
    return acc * a.pow(static_cast<long>(prev));
}

Poly Poly::subst(const Poly& u) const {
    Poly acc;
    unsigned prev = 0;
    bool started = false;
    auto upow = [&u](unsigned k) {
        Poly r(1);
        for (unsigned i = 0; i < k; ++i) r *= u;
        return r;
    };
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!started) {
            acc = Poly(it->second);
            started = true;
        } else {
            acc = acc * upow(prev - it->first) + Poly(it->second);
        }
        prev = it->first;
    }
    if (!started) return Poly();
    return acc * upow(prev);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const unsigned e = it->first;
        const Scalar& c = it->second;
        std::string body;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational();
            negative = r.sign() < 0;
            if (negative) r = -r;
            const bool unit = r.is_one();
            if (e == 0) {
                body = r.str();
            } else if (unit) {
                body = "";
            } else {
                body = r.str();
            }
        } else {
            body = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (e == 0) {
            os << (body.empty() ? "1" : body);
        } else {
            if (!body.empty()) os << body << "*";
            os << "x";
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    Poly q;
    Poly r = f;
    const int dg = g.degree();
    const Scalar lead_inv = g.leading_coeff().inverse();
    while (!r.is_zero() && r.degree() >= dg) {
        const unsigned shift = static_cast<unsigned>(r.degree() - dg);
        const Scalar c = r.leading_coeff() * lead_inv;
        const Poly t = Poly::monomial(c, shift);
        q += t;
        r -= t * g;
    }
    return {q, r};
}

bool divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return divmod(f, g).second.is_zero();
}

Poly exact_div(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) {
        throw std::invalid_argument("exact division has a nonzero remainder");
    }
    return q;
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace orex
