#pragma once

#include <gmpxx.h>

#include <string>

#include "schwarz/error.hpp"

namespace schwarz {

using Rational = mpq_class;

// Complex number with exact rational real and imaginary parts (a Gaussian
// rational). This is the coefficient field for all symbolic algebra here.
// mpq_class keeps values canonical: lowest terms, positive denominator.
struct ExactComplex {
    Rational re;
    Rational im;

    ExactComplex() : re(0), im(0) {}
    ExactComplex(Rational r) : re(std::move(r)), im(0) {}
    ExactComplex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ExactComplex(long r) : re(r), im(0) {}
    ExactComplex(long r, long i) : re(r), im(i) {}

    static ExactComplex i() { return ExactComplex(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    ExactComplex conj() const { return ExactComplex(re, -im); }

    // |z|^2, exact.
    Rational norm() const { return re * re + im * im; }

    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re + b.re, a.im + b.im);
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re - b.re, a.im - b.im);
    }
    friend ExactComplex operator-(const ExactComplex& a) { return ExactComplex(-a.re, -a.im); }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return ExactComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        if (b.is_zero()) throw DomainError("exact division by zero");
        Rational n = b.norm();
        return ExactComplex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }
    ExactComplex& operator+=(const ExactComplex& o) { re += o.re; im += o.im; return *this; }
    ExactComplex& operator-=(const ExactComplex& o) { re -= o.re; im -= o.im; return *this; }
    ExactComplex& operator*=(const ExactComplex& o) { *this = *this * o; return *this; }

    friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactComplex& a, const ExactComplex& b) { return !(a == b); }

    // Total order used for canonical term choices: (re, im) lexicographic.
    friend bool operator<(const ExactComplex& a, const ExactComplex& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

std::string rational_to_string(const Rational& q);
std::string exact_to_string(const ExactComplex& c);

// Parses "a", "-a/b" etc.; throws ParseError on malformed input.
Rational rational_from_string(const std::string& s);

} // namespace schwarz
