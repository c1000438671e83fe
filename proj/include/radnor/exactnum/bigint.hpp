#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "radnor/errors.hpp"

namespace radnor {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Rational pow(const Rational& base, unsigned long exp) {
    return Rational(pow(BigInt(base.get_num()), exp), pow(BigInt(base.get_den()), exp));
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::size_t bit_length(const BigInt& n) {
    return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

/// Exact k-th root of a nonnegative integer, if it exists.
inline std::optional<BigInt> exact_root(const BigInt& n, unsigned long k) {
    if (n < 0) {
        return std::nullopt;
    }
    BigInt r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        return r;
    }
    return std::nullopt;
}

/// Exact k-th root of a positive rational, if it exists.
inline std::optional<Rational> exact_root(const Rational& q, unsigned long k) {
    auto num = exact_root(BigInt(q.get_num()), k);
    if (!num) {
        return std::nullopt;
    }
    auto den = exact_root(BigInt(q.get_den()), k);
    if (!den) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

/// Largest integer <= q.
inline BigInt floor(const Rational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Smallest integer >= q.
inline BigInt ceil(const Rational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// p-adic valuation of a nonzero integer.
inline unsigned long valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) {
        throw InvalidArgument("valuation of zero");
    }
    BigInt rest;
    return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

/// "m" when the denominator is 1, otherwise "m/n".
inline std::string to_string(const Rational& q) {
    return q.get_den() == 1 ? q.get_num().get_str(10) : q.get_str(10);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Parses an optionally signed decimal integer.
inline BigInt parse_bigint(std::string_view text) {
    auto s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!detail::all_digits(s)) {
        throw ParseError("not an integer: '" + std::string(text) + "'");
    }
    BigInt r(std::string(s), 10);
    return negative ? BigInt(-r) : r;
}

/// Parses "m", "m/n" or a finite decimal such as "0.05" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto s = detail::trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational r;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        BigInt d(std::string(den), 10);
        if (d == 0) {
            throw ParseError("zero denominator: '" + std::string(text) + "'");
        }
        r = Rational(BigInt(std::string(num), 10), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::all_digits(whole)) ||
            (!frac.empty() && !detail::all_digits(frac))) {
            throw ParseError("not a decimal: '" + std::string(text) + "'");
        }
        std::string digits = std::string(whole) + std::string(frac);
        r = Rational(BigInt(digits, 10), pow(BigInt(10), frac.size()));
    } else {
        if (!detail::all_digits(s)) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        r = Rational(BigInt(std::string(s), 10));
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

} // namespace radnor
