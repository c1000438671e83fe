#pragma once

#include "radnor/oracle/radical_expr.hpp"

namespace radnor {

using BivariatePoly = DensePoly<IntPolynomial>; // polynomial in y over Z[x]

namespace detail {

inline void check_cap(const RadicalExpr& e, unsigned long cap) {
    if (e.conjugate_bound() > cap) {
        throw CapExceeded("expression has up to " + std::to_string(e.conjugate_bound()) +
                          " conjugates, above the cap of " + std::to_string(cap));
    }
}

inline IntPolynomial minpoly_or_x(const std::optional<RadicalRational>& r) {
    return r ? r->minimal_polynomial() : IntPolynomial({BigInt(0), BigInt(1)});
}

/// f(y) with constant coefficients in x.
inline BivariatePoly lift_y(const IntPolynomial& f) {
    std::vector<IntPolynomial> c;
    for (const auto& a : f.coefficients()) {
        c.emplace_back(a);
    }
    return BivariatePoly(std::move(c));
}

/// g(x - y) as a polynomial in y.
inline BivariatePoly shifted_difference(const IntPolynomial& g) {
    BivariatePoly t(std::vector<IntPolynomial>{IntPolynomial({BigInt(0), BigInt(1)}), IntPolynomial(-1L)});
    BivariatePoly acc;
    for (int k = g.degree(); k >= 0; --k) {
        acc = acc * t + BivariatePoly(std::vector<IntPolynomial>{IntPolynomial(g.coeff(k))});
    }
    return acc;
}

/// y^deg(g) g(x/y) as a polynomial in y.
inline BivariatePoly homogenized_quotient(const IntPolynomial& g) {
    int n = g.degree();
    std::vector<IntPolynomial> c(static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(n - k)] = IntPolynomial::monomial(g.coeff(k), k);
    }
    return BivariatePoly(std::move(c));
}

} // namespace detail

/// An integer polynomial vanishing at e, from resultants of the leaf minimal
/// polynomials. Rational operands are applied as exact shifts and scalings.
inline IntPolynomial annihilating_poly(const RadicalExpr& e, unsigned long cap = 256) {
    detail::check_cap(e, cap);
    auto u = e.lhs.as_radical();
    if (!e.op) {
        return primitive_part(detail::minpoly_or_x(u));
    }
    auto v = e.rhs.as_radical();
    if (*e.op == ExprOp::Product) {
        if (!u || !v) {
            return IntPolynomial({BigInt(0), BigInt(1)});
        }
        if (u->is_rational()) {
            return scale_roots(v->minimal_polynomial(), u->base());
        }
        if (v->is_rational()) {
            return scale_roots(u->minimal_polynomial(), v->base());
        }
        auto r = resultant(detail::lift_y(u->minimal_polynomial()), detail::homogenized_quotient(v->minimal_polynomial()));
        return primitive_part(r);
    }
    if (!u || !v) {
        return primitive_part(detail::minpoly_or_x(u ? u : v));
    }
    if (u->is_rational()) {
        return taylor_shift(v->minimal_polynomial(), -u->base());
    }
    if (v->is_rational()) {
        return taylor_shift(u->minimal_polynomial(), -v->base());
    }
    auto r = resultant(detail::lift_y(u->minimal_polynomial()), detail::shifted_difference(v->minimal_polynomial()));
    return primitive_part(r);
}

} // namespace radnor
