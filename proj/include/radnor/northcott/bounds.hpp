#pragma once

#include <string>

#include "radnor/exactnum/primes.hpp"
#include "radnor/exactnum/transcendental.hpp"
#include "radnor/polyalg/irreducibility.hpp"

namespace radnor {

/// (1/(2(d-1))) (logNormDisc/(d degK) - log d). Negative values are vacuous bounds.
inline CertifiedReal silverman_bound(const CertifiedReal& log_norm_disc, const BigInt& d, const BigInt& deg_k,
                                     mpfr_prec_t precision = 128) {
    if (d < 2) {
        throw InvalidArgument("silverman_bound needs d >= 2");
    }
    if (deg_k < 1) {
        throw InvalidArgument("silverman_bound needs [K:Q] >= 1");
    }
    if (log_norm_disc.certainly_negative()) {
        throw InvalidArgument("log of a discriminant norm is non-negative");
    }
    mpfr_prec_t bits = std::max(precision, log_norm_disc.bits()) + 16;
    auto inner = log_norm_disc.with_bits(bits) / BigInt(d * deg_k) - log_interval(d, bits);
    return (inner / BigInt(2 * (d - 1))).with_bits(precision);
}

/// degK (d-1) log(pq): what p^(degK(d-1)) q^(degK(d-1)) | N(D) gives for log N(D).
inline CertifiedReal ramification_log_bound(const BigInt& p, const BigInt& q, const BigInt& d, const BigInt& deg_k,
                                            mpfr_prec_t precision = 128) {
    if (!(p < q)) {
        throw InvalidArgument("ramification_log_bound needs p < q");
    }
    if (d < 2 || deg_k < 1) {
        throw InvalidArgument("ramification_log_bound needs d >= 2 and [K:Q] >= 1");
    }
    return (log_interval(BigInt(p * q), precision + 16) * BigInt(deg_k * (d - 1))).with_bits(precision);
}

/// log(p)/d - log(d)/(2(d-1)).
inline CertifiedReal corollary_lower_bound(const BigInt& p, const BigInt& d, mpfr_prec_t precision = 128) {
    if (d < 2) {
        throw InvalidArgument("corollary_lower_bound needs d >= 2");
    }
    if (p < 2) {
        throw InvalidArgument("corollary_lower_bound needs p >= 2");
    }
    mpfr_prec_t bits = precision + 16;
    return (log_interval(p, bits) / d - log_interval(d, bits) / BigInt(2 * (d - 1))).with_bits(precision);
}

struct DivisibilityReport {
    BigInt p, q, d;
    IntPolynomial polynomial;  // x^d - p q^(d-1)
    IntPolynomial alternative; // x^d - p^(d-1) q
    BigInt discriminant;
    unsigned long p_valuation = 0;
    unsigned long q_valuation = 0;
    BigInt cofactor; // |disc| / (p^vp q^vq)
    bool p_divides = false;
    bool q_divides = false;
    bool p_eisenstein = false;
    bool q_eisenstein = false;

    bool holds() const { return p_divides && q_divides && p_eisenstein && q_eisenstein; }
};

namespace detail {

inline IntPolynomial pure_binomial(const BigInt& d, const BigInt& constant) {
    std::vector<BigInt> c(d.get_ui() + 1, BigInt(0));
    c.front() = -constant;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

} // namespace detail

/// p^(d-1) and q^(d-1) dividing disc(x^d - p q^(d-1)), plus both Eisenstein presentations.
inline DivisibilityReport verify_divisibility(const BigInt& p, const BigInt& q, const BigInt& d) {
    if (!is_prime(p) || !is_prime(q)) {
        throw InvalidArgument("verify_divisibility needs primes p and q");
    }
    if (p == q) {
        throw InvalidArgument("verify_divisibility needs p != q");
    }
    if (d < 2 || !d.fits_ulong_p() || d > 4096) {
        throw InvalidArgument("verify_divisibility needs 2 <= d <= 4096");
    }
    unsigned long e = d.get_ui() - 1;
    DivisibilityReport r;
    r.p = p;
    r.q = q;
    r.d = d;
    r.polynomial = detail::pure_binomial(d, p * pow(q, e));
    r.alternative = detail::pure_binomial(d, pow(p, e) * q);
    r.discriminant = discriminant(r.polynomial);
    r.p_valuation = valuation(r.discriminant, p);
    r.q_valuation = valuation(r.discriminant, q);
    r.p_divides = divides(pow(p, e), r.discriminant);
    r.q_divides = divides(pow(q, e), r.discriminant);
    r.cofactor = abs(r.discriminant) / (pow(p, r.p_valuation) * pow(q, r.q_valuation));
    r.p_eisenstein = eisenstein_primes(r.polynomial, {p}).count(p) > 0;
    r.q_eisenstein = eisenstein_primes(r.alternative, {q}).count(q) > 0;
    return r;
}

} // namespace radnor
