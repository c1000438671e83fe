#pragma once

#include "radnor/exactnum/certified_real.hpp"

namespace radnor {

/// Rectangular complex enclosure re + i*im.
struct ComplexInterval {
    CertifiedReal re;
    CertifiedReal im;

    ComplexInterval() = default;
    ComplexInterval(CertifiedReal r, CertifiedReal i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexInterval point(const Float& r, const Float& i, mpfr_prec_t bits) {
        return {CertifiedReal::hull(r, r, bits), CertifiedReal::hull(i, i, bits)};
    }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
        CertifiedReal denom = pow(b.re, 2UL) + pow(b.im, 2UL);
        return {(a.re * b.re + a.im * b.im) / denom, (a.im * b.re - a.re * b.im) / denom};
    }

    CertifiedReal squared_modulus() const { return pow(re, 2UL) + pow(im, 2UL); }
    CertifiedReal modulus() const { return sqrt(squared_modulus()); }
};

} // namespace radnor
