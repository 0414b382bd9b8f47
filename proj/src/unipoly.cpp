#include "schwarz/unipoly.hpp"

#include <algorithm>

namespace schwarz {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(ExactComplex c, int k) {
    UniPoly p;
    if (c.is_zero()) return p;
    if (k < 0) throw DomainError("negative exponent in monomial");
    p.c_.assign(static_cast<std::size_t>(k) + 1, ExactComplex());
    p.c_.back() = std::move(c);
    return p;
}

const ExactComplex& UniPoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return c_.back();
}

ExactComplex UniPoly::eval(const ExactComplex& x) const {
    ExactComplex acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    UniPoly d;
    if (c_.size() <= 1) return d;
    d.c_.resize(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d.c_[k - 1] = ExactComplex(Rational(static_cast<long>(k))) * c_[k];
    d.trim();
    return d;
}

UniPoly UniPoly::conj() const {
    UniPoly r(*this);
    for (auto& c : r.c_) c = c.conj();
    return r;
}

UniPoly UniPoly::reversed() const {
    UniPoly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly r(*this);
    ExactComplex inv = ExactComplex(1L) / leading();
    for (auto& c : r.c_) c *= inv;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t k = 0; k < r.c_.size(); ++k) {
        if (k < a.c_.size()) r.c_[k] += a.c_[k];
        if (k < b.c_.size()) r.c_[k] += b.c_[k];
    }
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator-(const UniPoly& a) {
    UniPoly r(a);
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ExactComplex());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const ExactComplex& s, const UniPoly& a) {
    UniPoly r(a);
    if (s.is_zero()) return UniPoly();
    for (auto& c : r.c_) c *= s;
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    UniPoly acc = UniPoly::constant(ExactComplex(1L));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    q = UniPoly();
    r = a;
    int db = b.degree();
    ExactComplex lb_inv = ExactComplex(1L) / b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        int k = r.degree() - db;
        ExactComplex f = r.leading() * lb_inv;
        q = q + UniPoly::monomial(f, k);
        r = r - UniPoly::monomial(f, k) * b;
    }
}

UniPoly UniPoly::exact_div(const UniPoly& a, const UniPoly& b) {
    UniPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly q, r;
        UniPoly::divmod(x, y, q, r);
        x = y;
        y = r.monic(); // keeps coefficient growth down, gcd is monic anyway
    }
    return x.monic();
}

} // namespace schwarz
