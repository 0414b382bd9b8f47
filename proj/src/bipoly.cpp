#include "schwarz/bipoly.hpp"

#include <algorithm>

namespace schwarz {

const char* var_name(VarPair vp, Var v) {
    switch (vp) {
        case VarPair::XY: return v == Var::First ? "x" : "y";
        case VarPair::ZW: return v == Var::First ? "z" : "w";
        case VarPair::UV: return v == Var::First ? "u" : "v";
        case VarPair::ZV: return v == Var::First ? "z" : "v";
    }
    return "?";
}

std::string varpair_name(VarPair vp) {
    return std::string(var_name(vp, Var::First)) + var_name(vp, Var::Second);
}

void BiPoly::check_same(const BiPoly& a, const BiPoly& b) {
    if (a.vars_ != b.vars_)
        throw DomainError("mixed variable pairs in BiPoly arithmetic: " + varpair_name(a.vars_) +
                          " vs " + varpair_name(b.vars_));
}

BiPoly BiPoly::constant(VarPair vp, ExactComplex v) {
    BiPoly p(vp);
    if (!v.is_zero()) p.terms_[{0, 0}] = std::move(v);
    return p;
}

BiPoly BiPoly::monomial(VarPair vp, ExactComplex c, int i, int j) {
    BiPoly p(vp);
    if (i < 0 || j < 0) throw DomainError("negative exponent in monomial");
    if (!c.is_zero()) p.terms_[{i, j}] = std::move(c);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, VarPair vp, Var v) {
    BiPoly r(vp);
    for (int k = 0; k <= p.degree(); ++k) {
        ExactComplex c = p.coeff(k);
        if (c.is_zero()) continue;
        if (v == Var::First)
            r.terms_[{k, 0}] = std::move(c);
        else
            r.terms_[{0, k}] = std::move(c);
    }
    return r;
}

ExactComplex BiPoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? ExactComplex() : it->second;
}

void BiPoly::set_coeff(int i, int j, ExactComplex v) {
    if (v.is_zero())
        terms_.erase({i, j});
    else
        terms_[{i, j}] = std::move(v);
}

void BiPoly::add_term(int i, int j, const ExactComplex& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int BiPoly::degree(Var v) const {
    int d = -1;
    for (const auto& [k, c] : terms_)
        d = std::max(d, v == Var::First ? k.first : k.second);
    return d;
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

BiPoly BiPoly::derivative(Var v) const {
    BiPoly r(vars_);
    for (const auto& [k, c] : terms_) {
        int e = v == Var::First ? k.first : k.second;
        if (e == 0) continue;
        ExactComplex nc = ExactComplex(Rational(static_cast<long>(e))) * c;
        if (v == Var::First)
            r.add_term(k.first - 1, k.second, nc);
        else
            r.add_term(k.first, k.second - 1, nc);
    }
    return r;
}

BiPoly BiPoly::conj() const {
    BiPoly r(vars_);
    for (const auto& [k, c] : terms_) r.terms_[k] = c.conj();
    return r;
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r(vars_);
    for (const auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
    return r;
}

BiPoly BiPoly::relabel(VarPair vp) const {
    BiPoly r(vp);
    r.terms_ = terms_;
    return r;
}

std::vector<BiPoly> BiPoly::coeffs_in(Var v) const {
    std::vector<BiPoly> cs;
    int d = degree(v);
    if (d < 0) return cs;
    cs.assign(static_cast<std::size_t>(d) + 1, BiPoly(vars_));
    for (const auto& [k, c] : terms_) {
        if (v == Var::First)
            cs[static_cast<std::size_t>(k.first)].add_term(0, k.second, c);
        else
            cs[static_cast<std::size_t>(k.second)].add_term(k.first, 0, c);
    }
    return cs;
}

BiPoly BiPoly::from_coeffs_in(const std::vector<BiPoly>& cs, Var v, VarPair vp) {
    BiPoly r(vp);
    for (std::size_t e = 0; e < cs.size(); ++e) {
        for (const auto& [k, c] : cs[e].terms_) {
            if (v == Var::First) {
                if (k.first != 0) throw DomainError("coefficient not free of the carrier variable");
                r.add_term(static_cast<int>(e), k.second, c);
            } else {
                if (k.second != 0) throw DomainError("coefficient not free of the carrier variable");
                r.add_term(k.first, static_cast<int>(e), c);
            }
        }
    }
    return r;
}

UniPoly BiPoly::to_unipoly(Var v) const {
    Var other = v == Var::First ? Var::Second : Var::First;
    if (degree(other) > 0) throw DomainError("polynomial is not univariate in the requested variable");
    std::vector<ExactComplex> cs(static_cast<std::size_t>(std::max(degree(v), 0)) + 1);
    for (const auto& [k, c] : terms_)
        cs[static_cast<std::size_t>(v == Var::First ? k.first : k.second)] = c;
    return UniPoly(std::move(cs));
}

ExactComplex BiPoly::eval(const ExactComplex& a, const ExactComplex& b) const {
    std::vector<ExactComplex> pa{ExactComplex(1L)}, pb{ExactComplex(1L)};
    auto power = [](std::vector<ExactComplex>& cache, const ExactComplex& base,
                    int e) -> const ExactComplex& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    ExactComplex acc;
    for (const auto& [k, c] : terms_) acc += c * power(pa, a, k.first) * power(pb, b, k.second);
    return acc;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly::check_same(a, b);
    BiPoly r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator-(const BiPoly& a) {
    BiPoly r(a.vars_);
    for (const auto& [k, c] : a.terms_) r.terms_[k] = -c;
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly::check_same(a, b);
    BiPoly r(a.vars_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

BiPoly operator*(const ExactComplex& s, const BiPoly& a) {
    BiPoly r(a.vars_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = s * c;
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    BiPoly acc = BiPoly::constant(vars_, ExactComplex(1L));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BiPoly BiPoly::substitute(const BiPoly& for_first, const BiPoly& for_second) const {
    check_same(for_first, for_second);
    VarPair target = for_first.vars();
    BiPoly r(target);
    // cache powers
    std::vector<BiPoly> pow1{BiPoly::constant(target, ExactComplex(1L))};
    std::vector<BiPoly> pow2{BiPoly::constant(target, ExactComplex(1L))};
    auto power = [&](std::vector<BiPoly>& cache, const BiPoly& base, int e) -> const BiPoly& {
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
        return cache[static_cast<std::size_t>(e)];
    };
    for (const auto& [k, c] : terms_)
        r = r + c * (power(pow1, for_first, k.first) * power(pow2, for_second, k.second));
    return r;
}

} // namespace schwarz
