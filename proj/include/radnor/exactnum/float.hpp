#pragma once

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "radnor/exactnum/bigint.hpp"

namespace radnor {

/// Owning handle for an MPFR number. Every finite value is a dyadic rational.
class Float {
public:
    explicit Float(mpfr_prec_t prec = 64) { mpfr_init2(value_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)); }

    Float(const Float& other) {
        mpfr_init2(value_, mpfr_get_prec(other.value_));
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }

    Float(Float&& other) noexcept {
        mpfr_init2(value_, MPFR_PREC_MIN);
        mpfr_swap(value_, other.value_);
    }

    Float& operator=(const Float& other) {
        if (this != &other) {
            mpfr_set_prec(value_, mpfr_get_prec(other.value_));
            mpfr_set(value_, other.value_, MPFR_RNDN);
        }
        return *this;
    }

    Float& operator=(Float&& other) noexcept {
        mpfr_swap(value_, other.value_);
        return *this;
    }

    ~Float() { mpfr_clear(value_); }

    /// Exact copy of an integer (precision grows to fit).
    static Float exact(const BigInt& n) {
        Float f(static_cast<mpfr_prec_t>(std::max<std::size_t>(bit_length(n), 1)));
        mpfr_set_z(f.value_, n.get_mpz_t(), MPFR_RNDN);
        return f;
    }

    static Float from(const BigInt& n, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        Float f(prec);
        mpfr_set_z(f.value_, n.get_mpz_t(), rnd);
        return f;
    }

    static Float from(const Rational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
        Float f(prec);
        mpfr_set_q(f.value_, q.get_mpq_t(), rnd);
        return f;
    }

    static Float from(long v, mpfr_prec_t prec = 64) {
        Float f(prec);
        mpfr_set_si(f.value_, v, MPFR_RNDN);
        return f;
    }

    static Float infinity(int sign) {
        Float f(MPFR_PREC_MIN);
        mpfr_set_inf(f.value_, sign);
        return f;
    }

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(value_); }

    bool is_zero() const { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const { return mpfr_number_p(value_) != 0; }
    int sign() const { return mpfr_sgn(value_); }
    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

    /// Exact rational value; requires a finite number.
    Rational to_rational() const {
        if (!is_finite()) {
            throw InvalidArgument("non-finite value has no rational form");
        }
        if (is_zero()) {
            return Rational(0);
        }
        BigInt mant;
        mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), value_);
        Rational r(mant);
        if (e >= 0) {
            mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
        } else {
            mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
        }
        return r;
    }

    /// Decimal rendering with `digits` significant digits, rounded in direction `rnd`.
    std::string to_string(int digits, mpfr_rnd_t rnd) const {
        char* buf = nullptr;
        const char* fmt = rnd == MPFR_RNDD ? "%.*RDg" : rnd == MPFR_RNDU ? "%.*RUg" : "%.*RNg";
        mpfr_asprintf(&buf, fmt, digits, value_);
        std::string out(buf);
        mpfr_free_str(buf);
        return out;
    }

    friend int compare(const Float& a, const Float& b) { return mpfr_cmp(a.value_, b.value_); }
    friend int compare(const Float& a, const BigInt& b) { return mpfr_cmp_z(a.value_, b.get_mpz_t()); }
    friend int compare(const Float& a, const Rational& b) { return mpfr_cmp_q(a.value_, b.get_mpq_t()); }

    friend bool operator<(const Float& a, const Float& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
    friend bool operator<=(const Float& a, const Float& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
    friend bool operator>(const Float& a, const Float& b) { return b < a; }
    friend bool operator>=(const Float& a, const Float& b) { return b <= a; }
    friend bool operator==(const Float& a, const Float& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }

private:
    mpfr_t value_;
};

} // namespace radnor
