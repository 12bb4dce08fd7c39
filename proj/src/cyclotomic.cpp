#include "orex/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orex {

namespace {

// Dense univariate polynomials over Q, coefficient of z^i at index i, with
// no trailing zeros. Only what the field arithmetic below needs.
using DVec = std::vector<Rational>;

void trim(DVec& p) {
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

DVec add(const DVec& a, const DVec& b) {
    DVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    trim(r);
    return r;
}

DVec sub(const DVec& a, const DVec& b) {
    DVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    trim(r);
    return r;
}

DVec mul(const DVec& a, const DVec& b) {
    if (a.empty() || b.empty()) return {};
    DVec r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Division with remainder; g must be nonzero.
std::pair<DVec, DVec> divmod(DVec f, const DVec& g) {
    if (g.empty()) {
        throw std::domain_error("polynomial division by zero");
    }
    DVec q;
    const Rational lead_inv = g.back().inverse();
    while (f.size() >= g.size()) {
        const size_t shift = f.size() - g.size();
        const Rational c = f.back() * lead_inv;
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] += c;
        for (size_t i = 0; i < g.size(); ++i) {
            f[shift + i] -= c * g[i];
        }
        trim(f);
        if (f.empty()) break;
        if (f.size() > shift + g.size() - 1) {
            // The leading term did not cancel; cannot happen with exact
            // arithmetic.
            throw std::logic_error("division failed to reduce degree");
        }
    }
    trim(q);
    return {q, f};
}

DVec mod(DVec f, const DVec& g) {
    return divmod(std::move(f), g).second;
}

}  // namespace

unsigned Cyclotomic::totient(unsigned n) {
    if (n == 0) {
        throw std::domain_error("totient of zero");
    }
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

std::vector<unsigned> Cyclotomic::divisors(unsigned n) {
    std::vector<unsigned> small, large;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

const std::vector<Rational>& Cyclotomic::minimal_polynomial(unsigned conductor) {
    if (conductor == 0) {
        throw std::domain_error("conductor must be positive");
    }
    if (conductor > 10000) {
        throw std::domain_error("conductor too large");
    }
    static std::map<unsigned, DVec> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    auto it = cache.find(conductor);
    if (it != cache.end()) {
        return it->second;
    }

    // Phi_n = (z^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact
    // division; recursion depth is the divisor chain length.
    std::vector<unsigned> pending = {conductor};
    while (!pending.empty()) {
        unsigned n = pending.back();
        bool ready = true;
        for (unsigned d : divisors(n)) {
            if (d != n && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        pending.pop_back();
        if (cache.count(n)) continue;
        DVec num(n + 1);
        num[0] = Rational(-1);
        num[n] = Rational(1);
        for (unsigned d : divisors(n)) {
            if (d == n) continue;
            auto [quot, rem] = divmod(std::move(num), cache.at(d));
            if (!rem.empty()) {
                throw std::logic_error("cyclotomic polynomial division left a remainder");
            }
            num = std::move(quot);
        }
        cache.emplace(n, std::move(num));
    }
    return cache.at(conductor);
}

Cyclotomic::Cyclotomic(unsigned conductor, std::vector<Rational> coords)
    : conductor_(conductor), coords_(std::move(coords)) {}

Cyclotomic Cyclotomic::zeta(unsigned conductor) {
    std::vector<Rational> c(2);
    c[1] = Rational(1);
    return from_coords(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_coords(unsigned conductor, std::vector<Rational> coords) {
    const auto& phi = minimal_polynomial(conductor);
    const size_t deg = phi.size() - 1;
    trim(coords);
    if (coords.size() > deg) {
        coords = mod(std::move(coords), phi);
    }
    coords.resize(deg);
    return Cyclotomic(conductor, std::move(coords));
}

Cyclotomic Cyclotomic::from_rational(unsigned conductor, const Rational& r) {
    std::vector<Rational> c{r};
    return from_coords(conductor, std::move(c));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i) {
        if (!coords_[i].is_zero()) return false;
    }
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) {
        throw std::domain_error("cyclotomic value is not rational");
    }
    return coords_.empty() ? Rational(0) : coords_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    std::vector<Rational> c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = -coords_[i];
    return Cyclotomic(conductor_, std::move(c));
}

namespace {
void require_same_conductor(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor() != b.conductor()) {
        throw std::invalid_argument("cyclotomic arithmetic across different conductors");
    }
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_conductor(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return Cyclotomic(a.conductor_, std::move(c));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_conductor(a, b);
    std::vector<Rational> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return Cyclotomic(a.conductor_, std::move(c));
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    require_same_conductor(a, b);
    DVec pa = a.coords_, pb = b.coords_;
    trim(pa);
    trim(pb);
    return Cyclotomic::from_coords(a.conductor_, mul(pa, pb));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    // Extended Euclid: s*a + t*Phi_n = gcd. Phi_n is irreducible and a is a
    // nonzero residue of lower degree, so the gcd is a nonzero constant.
    DVec r0 = minimal_polynomial(conductor_);
    DVec r1 = coords_;
    trim(r1);
    DVec t0, t1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r2] = divmod(r0, r1);
        DVec t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) {
        throw std::logic_error("cyclotomic inverse: gcd with the minimal polynomial is not constant");
    }
    const Rational scale = r0[0].inverse();
    for (auto& c : t0) c *= scale;
    return from_coords(conductor_, std::move(t0));
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic base = *this;
    Cyclotomic acc = from_rational(conductor_, Rational(1));
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = coords_.size(); i-- > 0;) {
        const Rational& c = coords_[i];
        if (c.is_zero()) continue;
        Rational mag = c;
        if (first) {
            if (c.sign() < 0) {
                os << "-";
                mag = -c;
            }
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) mag = -c;
        }
        const bool unit = mag.is_one();
        if (i == 0) {
            os << mag.str();
        } else {
            if (!unit) os << mag.str() << "*";
            os << "zeta(" << conductor_ << ")";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace orex
