#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schwarz/exact.hpp"
#include "schwarz/unipoly.hpp"

namespace schwarz {

// Variable-pair tag for bivariate polynomials. Arithmetic across different
// tags is an error. ZV is an internal scratch pair used by elimination when a
// source variable and an image variable coexist.
enum class VarPair { XY, ZW, UV, ZV };

// 0-based index of a variable inside its pair.
enum class Var { First = 0, Second = 1 };

const char* var_name(VarPair vp, Var v);
std::string varpair_name(VarPair vp);

// Sparse bivariate polynomial over Gaussian rationals.
// Invariant: no stored zero coefficients.
class BiPoly {
public:
    using Key = std::pair<int, int>; // (exponent of first var, exponent of second var)
    using TermMap = std::map<Key, ExactComplex>;

    explicit BiPoly(VarPair vp = VarPair::XY) : vars_(vp) {}

    static BiPoly constant(VarPair vp, ExactComplex v);
    static BiPoly monomial(VarPair vp, ExactComplex c, int i, int j);
    static BiPoly variable(VarPair vp, Var v) {
        return monomial(vp, ExactComplex(1L), v == Var::First ? 1 : 0, v == Var::First ? 0 : 1);
    }
    // Embed a univariate polynomial as a BiPoly in the given variable slot.
    static BiPoly from_unipoly(const UniPoly& p, VarPair vp, Var v);

    VarPair vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Key{0, 0});
    }
    ExactComplex constant_term() const { return coeff(0, 0); }

    ExactComplex coeff(int i, int j) const;
    void set_coeff(int i, int j, ExactComplex v);
    void add_term(int i, int j, const ExactComplex& v);

    int degree(Var v) const;  // -1 for zero polynomial
    int total_degree() const; // -1 for zero polynomial

    BiPoly derivative(Var v) const;
    BiPoly conj() const;      // conjugate every coefficient
    BiPoly swap_vars() const; // exchange the two variables (tag preserved)
    BiPoly relabel(VarPair vp) const;

    // Coefficients with respect to `v`, each a BiPoly of degree 0 in `v`.
    // Index = exponent in `v`; size = degree(v)+1 (empty for zero input).
    std::vector<BiPoly> coeffs_in(Var v) const;
    static BiPoly from_coeffs_in(const std::vector<BiPoly>& cs, Var v, VarPair vp);

    // Extract as univariate; requires degree 0 in the other variable.
    UniPoly to_unipoly(Var v) const;

    ExactComplex eval(const ExactComplex& a, const ExactComplex& b) const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const ExactComplex& s, const BiPoly& a);
    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    BiPoly pow(int e) const;

    // Substitute polynomials for both variables (result in the target pair).
    BiPoly substitute(const BiPoly& for_first, const BiPoly& for_second) const;

private:
    VarPair vars_;
    TermMap terms_;
    static void check_same(const BiPoly& a, const BiPoly& b);
};

} // namespace schwarz
