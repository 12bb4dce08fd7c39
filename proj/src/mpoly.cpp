#include "orex/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orex {

MPoly MPoly::constant(unsigned nvars, const Scalar& c) {
    MPoly p(nvars);
    p.set(std::vector<unsigned>(nvars, 0), c);
    return p;
}

MPoly MPoly::variable(unsigned nvars, unsigned i) {
    if (i >= nvars) {
        throw std::invalid_argument("variable index out of range");
    }
    std::vector<unsigned> e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), Scalar(1));
}

MPoly MPoly::monomial(unsigned nvars, std::vector<unsigned> exps, const Scalar& c) {
    if (exps.size() != nvars) {
        throw std::invalid_argument("exponent vector length does not match nvars");
    }
    MPoly p(nvars);
    p.set(exps, c);
    return p;
}

bool MPoly::is_constant() const {
    if (t_.empty()) return true;
    if (t_.size() != 1) return false;
    const auto& e = t_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
}

Scalar MPoly::constant_value() const {
    if (!is_constant()) {
        throw std::domain_error("polynomial is not constant");
    }
    return t_.empty() ? Scalar(0) : t_.begin()->second;
}

int MPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : t_) {
        const int d = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
        if (d > deg) deg = d;
    }
    return deg;
}

Scalar MPoly::coeff(const std::vector<unsigned>& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar(0) : it->second;
}

void MPoly::set(const std::vector<unsigned>& e, Scalar c) {
    if (c.is_zero()) {
        t_.erase(e);
    } else {
        t_[e] = std::move(c);
    }
}

void MPoly::check_arity(const MPoly& o) const {
    if (nvars_ != o.nvars_) {
        throw std::invalid_argument("polynomials with different variable counts");
    }
}

MPoly MPoly::operator-() const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r = a;
    for (const auto& [e, c] : b.t_) {
        r.set(e, r.coeff(e) + c);
    }
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r = a;
    for (const auto& [e, c] : b.t_) {
        r.set(e, r.coeff(e) - c);
    }
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.t_) {
        for (const auto& [eb, cb] : b.t_) {
            std::vector<unsigned> e(a.nvars_);
            for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            r.set(e, r.coeff(e) + ca * cb);
        }
    }
    return r;
}

MPoly operator*(const Scalar& c, const MPoly& p) {
    MPoly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, pc] : p.t_) {
        r.set(e, c * pc);
    }
    return r;
}

std::string MPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& e = it->first;
        const Scalar& c = it->second;
        const bool has_vars =
            std::any_of(e.begin(), e.end(), [](unsigned v) { return v > 0; });
        std::string body;
        bool negative = false;
        if (c.is_rational()) {
            Rational r = c.rational();
            negative = r.sign() < 0;
            if (negative) r = -r;
            if (!has_vars || !r.is_one()) body = r.str();
        } else {
            body = "(" + c.str() + ")";
        }
        if (first) {
            if (negative) os << "-";
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        bool printed = false;
        if (!body.empty()) {
            os << body;
            printed = true;
        }
        for (unsigned i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

}  // namespace orex
