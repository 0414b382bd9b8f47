#pragma once

#include <vector>

#include "schwarz/exact.hpp"

namespace schwarz {

// Dense univariate polynomial over Gaussian rationals; index = exponent.
// Invariant: leading coefficient nonzero unless the polynomial is zero
// (coefficient vector empty).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<ExactComplex> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<ExactComplex> coeffs) : c_(coeffs) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(ExactComplex v) {
        UniPoly p;
        if (!v.is_zero()) p.c_.push_back(std::move(v));
        return p;
    }
    // c * x^k
    static UniPoly monomial(ExactComplex c, int k);
    static UniPoly variable() { return monomial(ExactComplex(1L), 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const ExactComplex& leading() const;
    ExactComplex coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return ExactComplex();
        return c_[static_cast<std::size_t>(k)];
    }
    const std::vector<ExactComplex>& coeffs() const { return c_; }

    ExactComplex eval(const ExactComplex& x) const;

    UniPoly derivative() const;
    UniPoly conj() const;     // conjugate every coefficient
    UniPoly reversed() const; // coefficient reversal: x^deg * p(1/x)
    UniPoly monic() const;    // divide by leading coefficient; zero stays zero

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const ExactComplex& s, const UniPoly& a);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly pow(int e) const;

    // Field division with remainder: a = q*b + r, deg r < deg b.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    // Division that must be exact; throws DomainError on nonzero remainder.
    static UniPoly exact_div(const UniPoly& a, const UniPoly& b);

private:
    std::vector<ExactComplex> c_;
    void trim();
};

// Monic gcd over the Gaussian-rational field. gcd(0,0) is an error.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

} // namespace schwarz
