#pragma once

#include <mpfr.h>

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

#include "radnor/exactnum/float.hpp"

namespace radnor {

/// Closed interval [lo, hi] with dyadic endpoints, guaranteed to contain the
/// real number it stands for. Arithmetic rounds outward at the working
/// precision `bits()`; operands of mixed precision combine at the larger one.
class CertifiedReal {
public:
    CertifiedReal() : CertifiedReal(BigInt(0)) {}

    explicit CertifiedReal(const BigInt& n, mpfr_prec_t bits = 64)
        : lo_(Float::exact(n)), hi_(Float::exact(n)), bits_(bits) {}

    explicit CertifiedReal(long n, mpfr_prec_t bits = 64) : CertifiedReal(BigInt(n), bits) {}

    /// Outward rounded enclosure of a rational.
    static CertifiedReal from_rational(const Rational& q, mpfr_prec_t bits) {
        return CertifiedReal(Float::from(q, bits, MPFR_RNDD), Float::from(q, bits, MPFR_RNDU), bits);
    }

    /// Enclosure with explicit endpoints; throws unless lo <= hi.
    static CertifiedReal hull(Float lo, Float hi, mpfr_prec_t bits) {
        if (!(lo <= hi)) {
            throw InvalidArgument("interval endpoints out of order");
        }
        return CertifiedReal(std::move(lo), std::move(hi), bits);
    }

    static CertifiedReal hull(const Rational& lo, const Rational& hi, mpfr_prec_t bits) {
        return hull(Float::from(lo, bits, MPFR_RNDD), Float::from(hi, bits, MPFR_RNDU), bits);
    }

    const Float& lo() const { return lo_; }
    const Float& hi() const { return hi_; }
    mpfr_prec_t bits() const { return bits_; }

    CertifiedReal with_bits(mpfr_prec_t bits) const { return CertifiedReal(lo_, hi_, bits); }

    bool is_point() const { return lo_ == hi_; }

    /// Upper bound on hi - lo.
    Float width() const {
        Float w(std::max(bits_, std::max(lo_.prec(), hi_.prec())));
        mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
        return w;
    }

    /// Exact width hi - lo as a rational.
    Rational width_exact() const { return hi_.to_rational() - lo_.to_rational(); }

    double midpoint() const { return (lo_.to_double() + hi_.to_double()) / 2.0; }

    bool contains(const Rational& q) const { return compare(lo_, q) <= 0 && compare(hi_, q) >= 0; }
    bool contains(const BigInt& n) const { return compare(lo_, n) <= 0 && compare(hi_, n) >= 0; }
    bool contains(const CertifiedReal& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }

    bool overlaps(const CertifiedReal& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// True only when every point of *this is below every point of `o`.
    bool certainly_less(const CertifiedReal& o) const { return hi_ < o.lo_; }
    bool certainly_less_equal(const CertifiedReal& o) const { return hi_ <= o.lo_; }
    bool certainly_positive() const { return lo_.sign() > 0; }
    bool certainly_negative() const { return hi_.sign() < 0; }

    /// "[lo, hi]" with outward decimal rounding.
    std::string to_string(int digits = 15) const {
        return "[" + lo_.to_string(digits, MPFR_RNDD) + ", " + hi_.to_string(digits, MPFR_RNDU) + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const CertifiedReal& x) { return os << x.to_string(); }

    friend CertifiedReal operator-(const CertifiedReal& a) {
        Float lo(a.hi_.prec()), hi(a.lo_.prec());
        mpfr_neg(lo.get(), a.hi_.get(), MPFR_RNDN);
        mpfr_neg(hi.get(), a.lo_.get(), MPFR_RNDN);
        return CertifiedReal(std::move(lo), std::move(hi), a.bits_);
    }

    friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
        mpfr_prec_t p = std::max(a.bits_, b.bits_);
        Float lo(p), hi(p);
        mpfr_add(lo.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
        mpfr_add(hi.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
        return CertifiedReal(std::move(lo), std::move(hi), p);
    }

    friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
        mpfr_prec_t p = std::max(a.bits_, b.bits_);
        Float lo(p), hi(p);
        mpfr_sub(lo.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
        mpfr_sub(hi.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
        return CertifiedReal(std::move(lo), std::move(hi), p);
    }

    friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
        mpfr_prec_t p = std::max(a.bits_, b.bits_);
        const Float* xs[2] = {&a.lo_, &a.hi_};
        const Float* ys[2] = {&b.lo_, &b.hi_};
        Float lo = Float::infinity(1), hi = Float::infinity(-1);
        Float t(p);
        for (const Float* x : xs) {
            for (const Float* y : ys) {
                mpfr_set_prec(t.get(), p);
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
                if (t < lo) {
                    lo = t;
                }
                mpfr_set_prec(t.get(), p);
                mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
                if (t > hi) {
                    hi = t;
                }
            }
        }
        return CertifiedReal(std::move(lo), std::move(hi), p);
    }

    friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
        if (b.contains_zero()) {
            throw InvalidArgument("interval division by an enclosure of zero");
        }
        mpfr_prec_t p = std::max(a.bits_, b.bits_);
        const Float* xs[2] = {&a.lo_, &a.hi_};
        const Float* ys[2] = {&b.lo_, &b.hi_};
        Float lo = Float::infinity(1), hi = Float::infinity(-1);
        Float t(p);
        for (const Float* x : xs) {
            for (const Float* y : ys) {
                mpfr_set_prec(t.get(), p);
                mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDD);
                if (t < lo) {
                    lo = t;
                }
                mpfr_set_prec(t.get(), p);
                mpfr_div(t.get(), x->get(), y->get(), MPFR_RNDU);
                if (t > hi) {
                    hi = t;
                }
            }
        }
        return CertifiedReal(std::move(lo), std::move(hi), p);
    }

    friend CertifiedReal operator+(const CertifiedReal& a, long b) { return a + CertifiedReal(b, a.bits_); }
    friend CertifiedReal operator-(const CertifiedReal& a, long b) { return a - CertifiedReal(b, a.bits_); }
    friend CertifiedReal operator*(const CertifiedReal& a, long b) { return a * CertifiedReal(b, a.bits_); }
    friend CertifiedReal operator/(const CertifiedReal& a, long b) { return a / CertifiedReal(b, a.bits_); }
    friend CertifiedReal operator*(const CertifiedReal& a, const BigInt& b) { return a * CertifiedReal(b, a.bits_); }
    friend CertifiedReal operator/(const CertifiedReal& a, const BigInt& b) { return a / CertifiedReal(b, a.bits_); }

    /// Pointwise monotone image under an MPFR function that is increasing on the domain.
    template <class Fn>
    CertifiedReal map_increasing(Fn fn, mpfr_prec_t bits) const {
        Float lo(bits), hi(bits);
        fn(lo.get(), lo_.get(), MPFR_RNDD);
        fn(hi.get(), hi_.get(), MPFR_RNDU);
        return CertifiedReal(std::move(lo), std::move(hi), bits);
    }

private:
    CertifiedReal(Float lo, Float hi, mpfr_prec_t bits) : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {}

    Float lo_;
    Float hi_;
    mpfr_prec_t bits_;
};

inline CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b) {
    const Float& lo = a.lo() < b.lo() ? a.lo() : b.lo();
    const Float& hi = a.hi() < b.hi() ? a.hi() : b.hi();
    return CertifiedReal::hull(lo, hi, std::max(a.bits(), b.bits()));
}

inline CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
    const Float& lo = a.lo() > b.lo() ? a.lo() : b.lo();
    const Float& hi = a.hi() > b.hi() ? a.hi() : b.hi();
    return CertifiedReal::hull(lo, hi, std::max(a.bits(), b.bits()));
}

/// Natural log of an interval with positive lower endpoint.
inline CertifiedReal log(const CertifiedReal& x) {
    if (!x.certainly_positive()) {
        throw InvalidArgument("log of an enclosure that is not certainly positive");
    }
    return x.map_increasing([](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_log(r, a, rnd); }, x.bits());
}

inline CertifiedReal exp(const CertifiedReal& x) {
    return x.map_increasing([](mpfr_ptr r, mpfr_srcptr a, mpfr_rnd_t rnd) { mpfr_exp(r, a, rnd); }, x.bits());
}

inline CertifiedReal sqrt(const CertifiedReal& x) {
    if (x.certainly_negative()) {
        throw InvalidArgument("sqrt of a negative enclosure");
    }
    Float lo(x.bits()), hi(x.bits());
    if (x.lo().sign() <= 0) {
        mpfr_set_zero(lo.get(), 1);
    } else {
        mpfr_sqrt(lo.get(), x.lo().get(), MPFR_RNDD);
    }
    mpfr_sqrt(hi.get(), x.hi().get(), MPFR_RNDU);
    return CertifiedReal::hull(std::move(lo), std::move(hi), x.bits());
}

inline CertifiedReal abs(const CertifiedReal& x) {
    if (x.lo().sign() >= 0) {
        return x;
    }
    if (x.hi().sign() <= 0) {
        return -x;
    }
    Float hi(std::max(x.lo().prec(), x.hi().prec()));
    mpfr_neg(hi.get(), x.lo().get(), MPFR_RNDN);
    if (hi < x.hi()) {
        hi = x.hi();
    }
    return CertifiedReal::hull(Float::from(0L), std::move(hi), x.bits());
}

/// x^k for a natural exponent by binary powering.
inline CertifiedReal pow(const CertifiedReal& x, unsigned long k) {
    CertifiedReal result(1L, x.bits());
    CertifiedReal base = x;
    bool nonnegative = x.lo().sign() >= 0;
    if (!nonnegative && k % 2 == 0) {
        base = abs(x);
    }
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

/// x^q for positive x and rational q, as exp(q log x) unless q is a natural number.
inline CertifiedReal pow(const CertifiedReal& x, const Rational& q) {
    if (q == 0) {
        return CertifiedReal(1L, x.bits());
    }
    if (q.get_den() == 1 && q > 0 && q.get_num().fits_ulong_p()) {
        return pow(x, q.get_num().get_ui());
    }
    if (x.lo() == x.hi() && compare(x.lo(), BigInt(1)) == 0) {
        return CertifiedReal(1L, x.bits());
    }
    return exp(log(x) * CertifiedReal::from_rational(q, x.bits()));
}

} // namespace radnor
