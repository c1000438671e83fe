#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "radnor/exactnum/bigint.hpp"

namespace radnor {

/// Exact quotient of integers; throws if the division leaves a remainder.
inline BigInt exact_divide(const BigInt& a, const BigInt& b) {
    if (b == 0 || !divides(b, a)) {
        throw InvalidArgument("inexact integer division");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Dense univariate polynomial over an integral domain `Coeff`, stored
/// constant term first with no trailing zeros (the zero polynomial is empty).
///
/// `Coeff` needs ring arithmetic, construction from `long`, equality, and a
/// free `exact_divide(Coeff, Coeff)`. Nesting (`DensePoly<DensePoly<BigInt>>`)
/// gives bivariate polynomials for resultant elimination.
template <class Coeff>
class DensePoly {
public:
    DensePoly() = default;

    DensePoly(long c) {
        if (c != 0) {
            coeffs_.emplace_back(c);
        }
    }

    explicit DensePoly(Coeff c) {
        if (!(c == Coeff(0L))) {
            coeffs_.push_back(std::move(c));
        }
    }

    explicit DensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    DensePoly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }

    static DensePoly monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1, Coeff(0L));
        v[degree] = std::move(c);
        return DensePoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Coeff& lc() const { return coeffs_.back(); }

    Coeff coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Coeff(0L); }

    const std::vector<Coeff>& coefficients() const { return coeffs_; }

    DensePoly derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        std::vector<Coeff> v;
        v.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            v.push_back(coeffs_[i] * Coeff(static_cast<long>(i)));
        }
        return DensePoly(std::move(v));
    }

    /// Horner evaluation in any ring that accepts Coeff-by-value products.
    template <class Value>
    Value evaluate(const Value& x) const {
        Value acc(0L);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * x + Value(*it);
        }
        return acc;
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

    friend DensePoly operator-(const DensePoly& a) {
        std::vector<Coeff> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            v.push_back(-c);
        }
        return DensePoly(std::move(v));
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<Coeff> v(std::max(a.coeffs_.size(), b.coeffs_.size()), Coeff(0L));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            v[i] = a.coeffs_[i];
        }
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
            v[i] = v[i] + b.coeffs_[i];
        }
        return DensePoly(std::move(v));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<Coeff> v(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0L));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == Coeff(0L)) {
                continue;
            }
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return DensePoly(std::move(v));
    }

    friend DensePoly operator*(const DensePoly& a, const Coeff& s) {
        if (s == Coeff(0L)) {
            return {};
        }
        std::vector<Coeff> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            v.push_back(c * s);
        }
        return DensePoly(std::move(v));
    }

    /// Coefficient-wise exact division by a scalar.
    friend DensePoly exact_divide(const DensePoly& a, const Coeff& s) {
        std::vector<Coeff> v;
        v.reserve(a.coeffs_.size());
        for (const auto& c : a.coeffs_) {
            v.push_back(exact_divide(c, s));
        }
        return DensePoly(std::move(v));
    }

    /// Exact polynomial quotient a / b; throws if b does not divide a.
    friend DensePoly exact_divide(const DensePoly& a, const DensePoly& b) {
        if (b.is_zero()) {
            throw InvalidArgument("polynomial division by zero");
        }
        if (a.is_zero()) {
            return {};
        }
        if (a.degree() < b.degree()) {
            throw InvalidArgument("inexact polynomial division");
        }
        std::vector<Coeff> rem = a.coeffs_;
        std::vector<Coeff> quot(a.coeffs_.size() - b.coeffs_.size() + 1, Coeff(0L));
        const std::size_t db = b.coeffs_.size() - 1;
        for (std::size_t k = quot.size(); k-- > 0;) {
            Coeff q = exact_divide(rem[k + db], b.lc());
            if (!(q == Coeff(0L))) {
                for (std::size_t j = 0; j <= db; ++j) {
                    rem[k + j] = rem[k + j] - q * b.coeffs_[j];
                }
            }
            quot[k] = std::move(q);
        }
        for (const auto& r : rem) {
            if (!(r == Coeff(0L))) {
                throw InvalidArgument("inexact polynomial division");
            }
        }
        return DensePoly(std::move(quot));
    }

    friend DensePoly pow(const DensePoly& a, unsigned long k) {
        DensePoly result(1L);
        DensePoly base = a;
        while (k > 0) {
            if (k & 1UL) {
                result = result * base;
            }
            k >>= 1;
            if (k > 0) {
                base = base * base;
            }
        }
        return result;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == Coeff(0L)) {
            coeffs_.pop_back();
        }
    }

    std::vector<Coeff> coeffs_;
};

template <class Coeff>
Coeff ring_pow(const Coeff& base, unsigned long k) {
    Coeff result(1L);
    Coeff b = base;
    while (k > 0) {
        if (k & 1UL) {
            result = result * b;
        }
        k >>= 1;
        if (k > 0) {
            b = b * b;
        }
    }
    return result;
}

/// lc(b)^(deg a - deg b + 1) * a  mod  b, computed without division.
template <class Coeff>
DensePoly<Coeff> pseudo_remainder(const DensePoly<Coeff>& a, const DensePoly<Coeff>& b) {
    if (b.is_zero()) {
        throw InvalidArgument("pseudo-remainder by zero");
    }
    if (a.degree() < b.degree()) {
        return a;
    }
    std::vector<Coeff> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    const Coeff& lb = b.lc();
    // Runs deg a - deg b + 1 times, so the lb power is exactly the prem exponent.
    for (int top = a.degree(); top >= db; --top) {
        Coeff lead = rem[top];
        for (int i = 0; i < top; ++i) {
            rem[i] = rem[i] * lb;
        }
        if (!(lead == Coeff(0L))) {
            for (int j = 0; j < db; ++j) {
                rem[top - db + j] = rem[top - db + j] - lead * bc[j];
            }
        }
        rem.pop_back();
    }
    return DensePoly<Coeff>(std::move(rem));
}

/// Resultant by the subresultant remainder sequence. Intermediate divisions
/// are exact in the coefficient domain, so coefficient growth stays polynomial.
template <class Coeff>
Coeff resultant(DensePoly<Coeff> a, DensePoly<Coeff> b) {
    if (a.is_zero() || b.is_zero()) {
        return Coeff(0L);
    }
    if (a.degree() == 0) {
        return ring_pow(a.lc(), static_cast<unsigned long>(b.degree()));
    }
    if (b.degree() == 0) {
        return ring_pow(b.lc(), static_cast<unsigned long>(a.degree()));
    }
    bool negate = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        negate = (a.degree() % 2 == 1) && (b.degree() % 2 == 1);
    }
    Coeff g(1L);
    Coeff h(1L);
    for (;;) {
        const unsigned long delta = static_cast<unsigned long>(a.degree() - b.degree());
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) {
            negate = !negate;
        }
        DensePoly<Coeff> r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) {
            return Coeff(0L);
        }
        b = exact_divide(r, g * ring_pow(h, delta));
        g = a.lc();
        if (delta > 0) {
            h = exact_divide(ring_pow(g, delta), ring_pow(h, delta - 1));
        }
        if (b.degree() == 0) {
            break;
        }
    }
    const unsigned long da = static_cast<unsigned long>(a.degree());
    Coeff res = exact_divide(ring_pow(b.lc(), da), ring_pow(h, da - 1));
    return negate ? Coeff(-res) : res;
}

} // namespace radnor
