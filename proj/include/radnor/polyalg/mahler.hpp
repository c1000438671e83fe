#pragma once

#include "radnor/exactnum/transcendental.hpp"
#include "radnor/polyalg/roots.hpp"

namespace radnor {

namespace detail {

/// log max(1, r) for an enclosure r of a modulus.
inline CertifiedReal log_max_one(const CertifiedReal& r) {
    const BigInt one(1);
    if (compare(r.hi(), one) <= 0) {
        return CertifiedReal(0L, r.bits());
    }
    auto hi = log(CertifiedReal::hull(r.hi(), r.hi(), r.bits()));
    if (compare(r.lo(), one) >= 0) {
        auto lo = log(CertifiedReal::hull(r.lo(), r.lo(), r.bits()));
        return CertifiedReal::hull(lo.lo(), hi.hi(), r.bits());
    }
    return CertifiedReal::hull(Float::from(0L), hi.hi(), r.bits());
}

} // namespace detail

/// Certified log M(f) = log|lc| + sum over roots of log max(1, |root|).
///
/// f must be squarefree with deg f >= 1. The root disks are tightened until
/// the enclosure's width is at most 2^-precision * max(1, |log M|).
inline CertifiedReal log_mahler(const IntPolynomial& f, mpfr_prec_t precision) {
    if (f.degree() < 1) {
        throw InvalidArgument("log_mahler needs degree >= 1");
    }
    if (!is_squarefree(f)) {
        throw NotSquarefree("log_mahler needs a squarefree polynomial: " + to_string(f));
    }
    if (f.degree() == 1) {
        BigInt a = abs(f.coeff(0));
        BigInt b = abs(f.lc());
        return log_interval(a > b ? a : b, precision);
    }
    for (mpfr_prec_t p = precision + 8; p <= detail::kRootPrecisionLimit; p *= 2) {
        auto disks = isolate_roots(f, p);
        const mpfr_prec_t bits = p + 16;
        CertifiedReal total = log_interval(BigInt(abs(f.lc())), bits);
        for (const auto& d : disks) {
            total = total + detail::log_max_one(d.modulus(bits));
        }
        Float target(bits);
        Float mag(bits);
        mpfr_abs(mag.get(), total.hi().get(), MPFR_RNDD);
        if (compare(mag, BigInt(1)) < 0) {
            mpfr_set_ui(mag.get(), 1, MPFR_RNDN);
        }
        mpfr_mul_2si(target.get(), mag.get(), -static_cast<long>(precision), MPFR_RNDD);
        if (total.width() <= target) {
            return total.with_bits(precision);
        }
    }
    throw PrecisionExhausted("log_mahler: enclosure did not reach the requested width");
}

/// Weil height of the roots of an irreducible f: log M(f) / deg f.
/// Only squarefreeness is checked.
inline CertifiedReal height_from_minpoly(const IntPolynomial& f, mpfr_prec_t precision) {
    auto m = log_mahler(f, precision + 8);
    return (m / static_cast<long>(f.degree())).with_bits(precision);
}

} // namespace radnor
