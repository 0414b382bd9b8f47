#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace schwarz::detail {

// Fraction-free Bareiss determinant over an integral domain. Ops supplies
// is_zero / mul / sub / exact_div / one. Row pivoting only; a fully zero
// pivot column short-circuits to a zero determinant.
template <class R, class Ops>
R bareiss_determinant(std::vector<std::vector<R>> m, const Ops& ops) {
    const std::size_t n = m.size();
    if (n == 0) return ops.one();
    bool negate = false;
    R prev = ops.one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && ops.is_zero(m[piv][k])) ++piv;
        if (piv == n) return ops.zero();
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R num = ops.sub(ops.mul(m[i][j], m[k][k]), ops.mul(m[i][k], m[k][j]));
                m[i][j] = (k == 0) ? std::move(num) : ops.exact_div(num, prev);
            }
            m[i][k] = ops.zero();
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    return negate ? ops.sub(ops.zero(), det) : det;
}

// Sylvester resultant of A = sum a[i] t^i and B = sum b[j] t^j with respect
// to t, over the coefficient ring R. Leading entries must be nonzero.
template <class R, class Ops>
R sylvester_resultant(const std::vector<R>& a, const std::vector<R>& b, const Ops& ops) {
    const std::size_t da = a.size() - 1, db = b.size() - 1;
    const std::size_t n = da + db;
    std::vector<std::vector<R>> m(n, std::vector<R>(n, ops.zero()));
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c <= da; ++c) m[r][r + c] = a[da - c];
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t c = 0; c <= db; ++c) m[db + r][r + c] = b[db - c];
    return bareiss_determinant(std::move(m), ops);
}

} // namespace schwarz::detail
