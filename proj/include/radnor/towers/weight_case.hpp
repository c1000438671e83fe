#pragma once

#include <optional>
#include <string>

#include "radnor/exactnum/certified_real.hpp"
#include "radnor/exactnum/transcendental.hpp"

namespace radnor {

enum class CaseTag { A, B1, B2, B3, C };

inline std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::A: return "A";
    case CaseTag::B1: return "B1";
    case CaseTag::B2: return "B2";
    case CaseTag::B3: return "B3";
    case CaseTag::C: return "C";
    }
    return "?";
}

inline CaseTag parse_case_tag(std::string_view text) {
    for (CaseTag t : {CaseTag::A, CaseTag::B1, CaseTag::B2, CaseTag::B3, CaseTag::C}) {
        if (text == to_string(t)) {
            return t;
        }
    }
    throw ParseError("unknown case '" + std::string(text) + "' (expected A, B1, B2, B3 or C)");
}

inline bool is_case_b(CaseTag tag) { return tag == CaseTag::B1 || tag == CaseTag::B2 || tag == CaseTag::B3; }

/// Weight function choice together with its parameters.
///   A:  f(x) = x log x / (2(x-1)) + c x, gamma = 0
///   B1: f(x) = 1/log x, gamma in [0,1)
///   B2: f(x) = c,       gamma in (0,1)
///   B3: f(x) = log x,   gamma in (0,1)
///   C:  no f, d_i = p_i, gamma = 1
struct WeightCase {
    CaseTag tag = CaseTag::A;
    std::optional<Rational> c;
    Rational gamma;

    static WeightCase make(CaseTag tag, std::optional<Rational> c = std::nullopt,
                           std::optional<Rational> gamma = std::nullopt) {
        WeightCase w;
        w.tag = tag;
        bool uses_c = tag == CaseTag::A || tag == CaseTag::B2;
        if (uses_c) {
            if (!c) {
                throw InvalidArgument("case " + to_string(tag) + " needs c");
            }
            if (*c <= 0) {
                throw InvalidArgument("c must be positive");
            }
            w.c = c;
        } else if (c) {
            throw InvalidArgument("case " + to_string(tag) + " takes no c");
        }
        switch (tag) {
        case CaseTag::A:
            w.gamma = gamma.value_or(Rational(0));
            if (w.gamma != 0) {
                throw InvalidArgument("case A is stated at gamma = 0");
            }
            break;
        case CaseTag::C:
            w.gamma = gamma.value_or(Rational(1));
            if (w.gamma != 1) {
                throw InvalidArgument("case C is stated at gamma = 1");
            }
            break;
        case CaseTag::B1:
            if (!gamma) {
                throw InvalidArgument("case B1 needs gamma");
            }
            if (*gamma < 0 || *gamma >= 1) {
                throw InvalidArgument("case B1 needs gamma in [0,1)");
            }
            w.gamma = *gamma;
            break;
        case CaseTag::B2:
        case CaseTag::B3:
            if (!gamma) {
                throw InvalidArgument("case " + to_string(tag) + " needs gamma");
            }
            if (*gamma <= 0 || *gamma >= 1) {
                throw InvalidArgument("case " + to_string(tag) + " needs gamma in (0,1)");
            }
            w.gamma = *gamma;
            break;
        }
        return w;
    }

    friend bool operator==(const WeightCase&, const WeightCase&) = default;
};

namespace detail {

/// log(d) / (2(d-1)), the Silverman correction term.
inline CertifiedReal silverman_term(const BigInt& d, mpfr_prec_t bits) {
    return log_interval(d, bits) / (BigInt(d - 1) * 2);
}

inline CertifiedReal power_of(const BigInt& d, const Rational& e, mpfr_prec_t bits) {
    if (e == 0) {
        return CertifiedReal(1L, bits);
    }
    return pow(CertifiedReal(d, bits), e);
}

} // namespace detail

/// f(d) for the case's weight function.
inline CertifiedReal f_eval(const WeightCase& w, const BigInt& d, mpfr_prec_t precision) {
    if (d < 2) {
        throw InvalidArgument("f needs d >= 2");
    }
    mpfr_prec_t bits = precision + 16;
    CertifiedReal out;
    switch (w.tag) {
    case CaseTag::A:
        out = detail::silverman_term(d, bits) * d + CertifiedReal::from_rational(*w.c * d, bits);
        break;
    case CaseTag::B1:
        out = CertifiedReal(1L, bits) / log_interval(d, bits);
        break;
    case CaseTag::B2:
        out = CertifiedReal::from_rational(*w.c, bits);
        break;
    case CaseTag::B3:
        out = log_interval(d, bits);
        break;
    case CaseTag::C:
        throw InvalidArgument("case C has no weight function");
    }
    return out.with_bits(precision);
}

/// The exponent F with threshold exp(F): f(d) for A, f(d) d^(1-gamma) for B.
inline CertifiedReal threshold_exponent(const WeightCase& w, const BigInt& d, mpfr_prec_t precision) {
    if (w.tag == CaseTag::A) {
        return f_eval(w, d, precision);
    }
    mpfr_prec_t bits = precision + 16;
    return (f_eval(w, d, bits) * detail::power_of(d, 1 - w.gamma, bits)).with_bits(precision);
}

/// exp(F(d)) with `precision` relative bits.
inline CertifiedReal threshold(const WeightCase& w, const BigInt& d, mpfr_prec_t precision) {
    auto F = threshold_exponent(w, d, precision + 16);
    // relative accuracy of exp(F) is the absolute accuracy of F
    mpfr_prec_t extra = 16 + static_cast<mpfr_prec_t>(std::max<long>(0, mpfr_get_exp(F.hi().get())));
    if (extra > 16) {
        F = threshold_exponent(w, d, precision + extra);
    }
    return exp_interval(F, precision);
}

/// d^gamma log d / (2(d-1)), the left side of the case B positivity condition.
inline CertifiedReal positivity_lhs(const WeightCase& w, const BigInt& d, mpfr_prec_t precision) {
    mpfr_prec_t bits = precision + 16;
    return (detail::power_of(d, w.gamma, bits) * detail::silverman_term(d, bits)).with_bits(precision);
}

} // namespace radnor
