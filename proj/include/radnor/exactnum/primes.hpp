#pragma once

#include <array>
#include <cstdint>

#include "radnor/exactnum/certify.hpp"

namespace radnor {

namespace detail {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

/// One Miller-Rabin round; n odd, n - 1 = d * 2^s.
inline bool strong_probable_prime(const BigInt& n, const BigInt& d, unsigned long s, const BigInt& base) {
    BigInt x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    BigInt n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) {
        return true;
    }
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n_minus_1) {
            return true;
        }
        if (x == 1) {
            return false;
        }
    }
    return false;
}

} // namespace detail

/// Primality test.
///
/// Below 2^64 the answer is exact: Miller-Rabin with the first twelve prime
/// bases is a proof in that range. Above 2^64 it runs 64 rounds with random
/// bases, so a composite survives with probability below 4^-64 = 2^-128. The
/// bases come from a generator seeded by n, which keeps the result a pure
/// function of n.
inline bool is_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    for (unsigned p : detail::kSmallPrimes) {
        if (n == p) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            return false;
        }
    }
    if (n < 97 * 97) {
        return true;
    }
    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    if (bit_length(n) <= 64) {
        for (unsigned base : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
            if (!detail::strong_probable_prime(n, d, s, BigInt(base))) {
                return false;
            }
        }
        return true;
    }
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(n);
    BigInt span = n - 3;
    for (int round = 0; round < 64; ++round) {
        BigInt base = rng.get_z_range(span) + 2; // uniform in [2, n-2]
        if (!detail::strong_probable_prime(n, d, s, base)) {
            return false;
        }
    }
    return true;
}

/// Smallest prime p with lower <= p <= upper and p > exceeding, where the two
/// bounds are produced by `bounds(bits)` and refined along `ladder` whenever a
/// prime candidate sits inside a bound's uncertainty.
template <class Bounds>
BigInt next_prime_in(Bounds&& bounds, const BigInt& exceeding, const PrecisionLadder& ladder = {}) {
    mpfr_prec_t bits = ladder.initial;
    auto [lower, upper] = bounds(bits);
    if (upper.certainly_less(lower)) {
        throw NoPrimeInRange("empty range: " + lower.to_string() + " > " + upper.to_string());
    }
    auto refine = [&]() {
        bits *= 2;
        if (bits > ladder.cap) {
            throw UndecidableBoundary("prime candidate undecided against range bounds at " +
                                      std::to_string(ladder.cap) + " bits");
        }
        std::tie(lower, upper) = bounds(bits);
    };

    BigInt k = floor(lower.lo().to_rational());
    if (k <= exceeding) {
        k = exceeding + 1;
    }
    for (;; ++k) {
        if (compare(upper.hi(), k) < 0) {
            throw NoPrimeInRange("no prime in " + lower.to_string() + " .. " + upper.to_string() +
                                 " exceeding " + exceeding.get_str());
        }
        if (!is_prime(k)) {
            continue;
        }
        // Is k >= lower?
        while (compare(lower.lo(), k) <= 0 && compare(lower.hi(), k) > 0) {
            refine();
        }
        if (compare(lower.hi(), k) > 0) {
            continue;
        }
        // Is k <= upper?
        while (compare(upper.lo(), k) < 0 && compare(upper.hi(), k) >= 0) {
            refine();
        }
        if (compare(upper.lo(), k) >= 0) {
            return k;
        }
        throw NoPrimeInRange("no prime in " + lower.to_string() + " .. " + upper.to_string() + " exceeding " +
                             exceeding.get_str());
    }
}

/// Fixed-bounds form: boundary ambiguity cannot be refined away and raises
/// UndecidableBoundary immediately.
inline BigInt next_prime_in(const CertifiedReal& lower, const CertifiedReal& upper, const BigInt& exceeding) {
    PrecisionLadder fixed{64, 64};
    return next_prime_in([&](mpfr_prec_t) { return EnclosurePair(lower, upper); }, exceeding, fixed);
}

} // namespace radnor
