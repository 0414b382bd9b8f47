#pragma once

#include "schwarz/bipoly.hpp"
#include "schwarz/unipoly.hpp"

namespace schwarz {

// Canonical representative of a BiPoly up to nonzero rational scaling:
// coefficients are coprime Gaussian integers ("integer content removed") and
// the lex-leading coefficient has positive real part, or positive imaginary
// part if its real part is zero.
BiPoly normal_form(const BiPoly& a);

// True if a and b agree after normal_form (i.e. equal up to a nonzero
// rational scalar).
bool equal_up_to_scalar(const BiPoly& a, const BiPoly& b);

// Sylvester resultant with respect to `eliminate`, computed by fraction-free
// Bareiss elimination. Both inputs must have positive degree in the
// eliminated variable; the result has degree 0 in it.
BiPoly resultant(const BiPoly& a, const BiPoly& b, Var eliminate);

// Internal variant with the standard degree-0 convention
// Res(A, c) = c^{deg A}; used by discriminant and singular-point code.
BiPoly resultant_allow_const(const BiPoly& a, const BiPoly& b, Var eliminate);

// Gcd of two BiPolys viewed in `v` over the rational-function field of the
// other variable, returned primitive in `v` (content of the inputs ignored).
BiPoly gcd_primitive(const BiPoly& a, const BiPoly& b, Var v);

// Full bivariate gcd (content gcd times primitive gcd), up to normal form.
BiPoly gcd_bivariate(const BiPoly& a, const BiPoly& b);

// True iff resultant(a, b, v) vanishes identically, decided through the
// primitive remainder sequence (equivalent and much cheaper than expanding
// the Sylvester determinant).
bool resultant_vanishes(const BiPoly& a, const BiPoly& b, Var v);

// Content of `a` with respect to `v`: monic univariate gcd of the
// coefficients, embedded as a BiPoly of degree 0 in `v`.
BiPoly content_in(const BiPoly& a, Var v);
BiPoly primitive_part_in(const BiPoly& a, Var v);

// Exact multivariate division; throws DomainError if b does not divide a.
BiPoly exact_div(const BiPoly& a, const BiPoly& b);

// Pseudo-remainder and pseudo-quotient in `v`: lc(b)^(da-db+1) * a = q*b + r.
void pseudo_divmod(const BiPoly& a, const BiPoly& b, Var v, BiPoly& q, BiPoly& r);

// A / gcd(A, dA/dv) in the coefficient-fraction field, cleared to a primitive
// polynomial; content of A in `v` is preserved.
BiPoly squarefree_part(const BiPoly& a, Var v);

// Squarefree part of a univariate polynomial (monic output).
UniPoly squarefree_part(const UniPoly& p);

// Coefficient conjugation for either polynomial type.
inline UniPoly conj_poly(const UniPoly& p) { return p.conj(); }
inline BiPoly conj_poly(const BiPoly& p) { return p.conj(); }

// Lemma-style root radius: max over i < n of (n*|a_i/a_n|)^(1/(n-i)),
// returned as an exact rational upper rounding of the radical. Every root of
// p has modulus <= the returned value.
Rational root_bound(const UniPoly& p);

// Smallest convenient rational r >= s^(1/k) (within ~2^-53 relative slack),
// verified exactly: r^k >= s. Requires s >= 0, k >= 1.
Rational rational_root_upper(const Rational& s, unsigned long k);

} // namespace schwarz
