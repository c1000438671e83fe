#pragma once

#include "radnor/exactnum/certified_real.hpp"

namespace radnor {

namespace detail {

/// True when width(x) <= 2^(1-precision) * min |x|.
inline bool relatively_narrow(const CertifiedReal& x, mpfr_prec_t precision) {
    if (x.is_point()) {
        return true;
    }
    if (x.contains_zero()) {
        return false;
    }
    Float mig(x.bits() + 8);
    if (x.lo().sign() > 0) {
        mpfr_set(mig.get(), x.lo().get(), MPFR_RNDD);
    } else {
        mpfr_neg(mig.get(), x.hi().get(), MPFR_RNDD);
    }
    mpfr_mul_2si(mig.get(), mig.get(), 1 - static_cast<long>(precision), MPFR_RNDD);
    return x.width() <= mig;
}

constexpr mpfr_prec_t kInternalPrecisionLimit = mpfr_prec_t(1) << 22;

} // namespace detail

/// Enclosure of log(x) for rational x > 0 with relative width at most
/// 2^(1-precision). Working precision escalates internally when x is close to 1.
inline CertifiedReal log_interval(const Rational& x, mpfr_prec_t precision) {
    if (x <= 0) {
        throw InvalidArgument("log_interval needs a positive argument");
    }
    if (x == 1) {
        return CertifiedReal(0L, precision);
    }
    for (mpfr_prec_t w = precision + 8; w <= detail::kInternalPrecisionLimit; w *= 2) {
        auto enclosure = log(CertifiedReal::from_rational(x, w));
        if (detail::relatively_narrow(enclosure, precision)) {
            return enclosure.with_bits(precision);
        }
    }
    throw PrecisionExhausted("log_interval: internal precision limit reached");
}

inline CertifiedReal log_interval(const BigInt& x, mpfr_prec_t precision) { return log_interval(Rational(x), precision); }

/// Enclosure of exp(x). For a point argument the relative width is at most
/// 2^(1-precision); otherwise the width is whatever the argument's width forces.
inline CertifiedReal exp_interval(const CertifiedReal& x, mpfr_prec_t precision) {
    if (x.is_point() && x.lo().is_zero()) {
        return CertifiedReal(1L, precision);
    }
    if (!x.is_point()) {
        return exp(x.with_bits(std::max(precision + 8, x.bits()))).with_bits(precision);
    }
    for (mpfr_prec_t w = precision + 8; w <= detail::kInternalPrecisionLimit; w *= 2) {
        auto enclosure = exp(x.with_bits(w));
        if (detail::relatively_narrow(enclosure, precision)) {
            return enclosure.with_bits(precision);
        }
    }
    throw PrecisionExhausted("exp_interval: internal precision limit reached");
}

} // namespace radnor
