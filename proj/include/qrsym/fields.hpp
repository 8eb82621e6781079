#ifndef QRSYM_FIELDS_HPP
#define QRSYM_FIELDS_HPP

#include <optional>
#include <vector>

#include "qrsym/poly.hpp"
#include "qrsym/ratfunc.hpp"

namespace qrsym {

// Coefficient tower. The grading variable is xi throughout; the base field is
// either Q (concrete weight) or Q(param) where param is the symbolic weight h
// or the expansion parameter hbar. Mixing levels is a type error.
using PolyQ = Poly<Rational>;
using RatQ = RatFunc<Rational>;   // rational functions of one variable over Q
using PolyP = Poly<RatQ>;         // polynomials in xi over Q(param)
using RatP = RatFunc<RatQ>;       // rational functions in xi over Q(param)

template <class K>
K scalar_to(const Rational& r);

template <>
inline Rational scalar_to<Rational>(const Rational& r) { return r; }

template <>
inline RatQ scalar_to<RatQ>(const Rational& r) { return RatQ(r); }

// Nonnegative integer roots of a rational-coefficient polynomial, found by an
// exact scan up to the Cauchy bound.
std::vector<long> nonneg_integer_roots(const PolyQ& p, long scan_cap = 1 << 20);

// All rational roots (used to list excluded weights in membership reports).
std::vector<Rational> rational_roots(const PolyQ& p);

// Re-expansion of f in the inner parameter: view f, a rational function of xi
// whose coefficients are rational in the parameter, as a rational function of
// the parameter with Q(xi) coefficients, and Taylor-expand at parameter = 0.
// Returns coefficients c_0(xi), ..., c_order(xi) with
//   f = sum c_k param^k + O(param^{order+1}).
std::vector<RatQ> taylor_in_param(const RatP& f, int order);

// Substitute param -> value exactly in every coefficient; the result lives
// over Q in the same outer variable.
RatQ substitute_param(const RatP& f, const Rational& value);

// Exact dense linear solve A x = b over a field; returns nullopt when the
// system is singular or inconsistent.
template <class K>
std::optional<std::vector<K>> linear_solve(std::vector<std::vector<K>> a, std::vector<K> b) {
    const size_t n = a.size();
    if (n == 0 || a[0].size() != n || b.size() != n) return std::nullopt;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        K inv = a[col][col].inv();
        for (size_t j = col; j < n; ++j) a[col][j] = a[col][j] * inv;
        b[col] = b[col] * inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            K f = a[r][col];
            for (size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[col][j];
            b[r] = b[r] - f * b[col];
        }
    }
    return b;
}

} // namespace qrsym

#endif
