#pragma once

#include <utility>
#include <vector>

#include "radnor/exactnum/certify.hpp"
#include "radnor/northcott/bounds.hpp"
#include "radnor/oracle/annihilator.hpp"
#include "radnor/polyalg/complex_interval.hpp"
#include "radnor/polyalg/mahler.hpp"

namespace radnor {

namespace detail {

/// Enclosure of the positive real b^(1/D).
inline CertifiedReal real_root(const Rational& b, unsigned long d, mpfr_prec_t bits) {
    Float lo = Float::from(b, bits, MPFR_RNDD);
    Float hi = Float::from(b, bits, MPFR_RNDU);
    if (d > 1) {
        mpfr_rootn_ui(lo.get(), lo.get(), d, MPFR_RNDD);
        mpfr_rootn_ui(hi.get(), hi.get(), d, MPFR_RNDU);
    }
    return CertifiedReal::hull(std::move(lo), std::move(hi), bits);
}

inline CertifiedReal pi_interval(mpfr_prec_t bits) {
    Float lo(bits), hi(bits);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return CertifiedReal::hull(std::move(lo), std::move(hi), bits);
}

/// sin or cos over an interval: value at the midpoint widened by the radius (both are 1-Lipschitz).
inline CertifiedReal lipschitz_trig(const CertifiedReal& theta, bool sine, mpfr_prec_t bits) {
    Float mid(bits + 8), rad(bits + 8);
    mpfr_add(mid.get(), theta.lo().get(), theta.hi().get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    Float r1(bits + 8), r2(bits + 8);
    mpfr_sub(r1.get(), theta.hi().get(), mid.get(), MPFR_RNDU);
    mpfr_sub(r2.get(), mid.get(), theta.lo().get(), MPFR_RNDU);
    mpfr_max(rad.get(), r1.get(), r2.get(), MPFR_RNDU);
    Float lo(bits), hi(bits);
    if (sine) {
        mpfr_sin(lo.get(), mid.get(), MPFR_RNDD);
        mpfr_sin(hi.get(), mid.get(), MPFR_RNDU);
    } else {
        mpfr_cos(lo.get(), mid.get(), MPFR_RNDD);
        mpfr_cos(hi.get(), mid.get(), MPFR_RNDU);
    }
    mpfr_sub(lo.get(), lo.get(), rad.get(), MPFR_RNDD);
    mpfr_add(hi.get(), hi.get(), rad.get(), MPFR_RNDU);
    return CertifiedReal::hull(std::move(lo), std::move(hi), bits);
}

/// exp(2 pi i a / n).
inline ComplexInterval root_of_unity(unsigned long a, unsigned long n, mpfr_prec_t bits) {
    a %= n;
    auto exact = [&](long re, long im) { return ComplexInterval(CertifiedReal(re, bits), CertifiedReal(im, bits)); };
    if (a == 0) {
        return exact(1, 0);
    }
    if (2 * a == n) {
        return exact(-1, 0);
    }
    if (4 * a == n) {
        return exact(0, 1);
    }
    if (4 * a == 3 * n) {
        return exact(0, -1);
    }
    auto theta = pi_interval(bits + 8) * static_cast<long>(2 * a) / static_cast<long>(n);
    return {lipschitz_trig(theta, false, bits), lipschitz_trig(theta, true, bits)};
}

/// Pairs (a, b) in Z_D1 x Z_D2 such that r1 -> zeta_D1^a r1, r2 -> zeta_D2^b r2
/// respects every relation r1^i r2^j in Q. For positive real radicals these
/// are exactly the embeddings of Q(r1, r2).
inline std::vector<std::pair<unsigned long, unsigned long>> galois_orbit(const RadicalRational& r1, const RadicalRational& r2) {
    unsigned long d1 = r1.root_degree();
    unsigned long d2 = r2.root_degree();
    unsigned long l = std::lcm(d1, d2);
    std::vector<std::pair<unsigned long, unsigned long>> relations;
    for (unsigned long i = 0; i < d1; ++i) {
        for (unsigned long j = 0; j < d2; ++j) {
            // (r1^i r2^j)^l = b1^(i l/d1) b2^(j l/d2)
            Rational power = pow(r1.base(), i * (l / d1)) * pow(r2.base(), j * (l / d2));
            if (exact_root(power, l)) {
                relations.emplace_back(i, j);
            }
        }
    }
    std::vector<std::pair<unsigned long, unsigned long>> orbit;
    for (unsigned long a = 0; a < d1; ++a) {
        for (unsigned long b = 0; b < d2; ++b) {
            bool ok = true;
            for (auto [i, j] : relations) {
                if ((a * i * (l / d1) + b * j * (l / d2)) % l != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                orbit.emplace_back(a, b);
            }
        }
    }
    if (orbit.size() * relations.size() != d1 * d2) {
        throw Error("internal: orbit size " + std::to_string(orbit.size()) + " inconsistent with " +
                    std::to_string(relations.size()) + " relations");
    }
    return orbit;
}

/// Rounds every coefficient enclosure to its unique integer; nullopt if some
/// enclosure is too wide or holds no integer.
inline std::optional<IntPolynomial> round_coefficients(const std::vector<ComplexInterval>& c) {
    std::vector<BigInt> out;
    for (const auto& z : c) {
        if (!z.im.contains(Rational(0))) {
            throw Error("internal: conjugate product has a non-real coefficient");
        }
        BigInt lo = ceil(z.re.lo().to_rational());
        BigInt hi = floor(z.re.hi().to_rational());
        if (lo != hi) {
            return std::nullopt;
        }
        out.push_back(lo);
    }
    return IntPolynomial(std::move(out));
}

} // namespace detail

/// Minimal polynomial of the real value of e: the product of (x - T sigma(e))
/// over the Galois orbit is an integer polynomial (T clears denominators), its
/// squarefree part is the minimal polynomial of T e, and the result is
/// verified by exact division into the annihilating polynomial.
inline IntPolynomial minimal_poly(const RadicalExpr& e, const PrecisionLadder& ladder = {}, unsigned long cap = 256) {
    detail::check_cap(e, cap);
    auto u = e.lhs.as_radical();
    std::optional<RadicalRational> v;
    ExprOp op = ExprOp::Sum;
    if (e.op) {
        op = *e.op;
        v = e.rhs.as_radical();
        if (op == ExprOp::Product && (!u || !v)) {
            return IntPolynomial({BigInt(0), BigInt(1)});
        }
        if (op == ExprOp::Sum && !u) {
            std::swap(u, v);
        }
    }
    if (!u) {
        return IntPolynomial({BigInt(0), BigInt(1)});
    }
    RadicalRational r1 = *u;
    RadicalRational r2 = v ? *v : RadicalRational();
    if (!v) {
        op = ExprOp::Product; // r1 * 1
    }
    auto orbit = detail::galois_orbit(r1, r2);
    BigInt t = r1.den() * r2.den(); // T r1 and T r2 are algebraic integers
    std::size_t n = orbit.size();

    // |T sigma(e)| <= T (|r1| + |r2|) bounds the coefficient sizes
    double magnitude = t.get_d() * (std::pow(r1.base().get_d(), 1.0 / static_cast<double>(r1.root_degree())) +
                                    std::pow(r2.base().get_d(), 1.0 / static_cast<double>(r2.root_degree())));
    double needed = static_cast<double>(n) * std::log2(2.0 + magnitude) + 64.0;
    mpfr_prec_t bits = std::max<mpfr_prec_t>(ladder.initial, static_cast<mpfr_prec_t>(needed));
    IntPolynomial annihilator = annihilating_poly(e, cap);
    for (; bits <= std::max<mpfr_prec_t>(ladder.cap, static_cast<mpfr_prec_t>(needed) * 4); bits *= 2) {
        auto x1 = detail::real_root(r1.base(), r1.root_degree(), bits) * t;
        auto x2 = detail::real_root(r2.base(), r2.root_degree(), bits);
        // coefficients of prod (x - z), constant first
        std::vector<ComplexInterval> poly{ComplexInterval(CertifiedReal(1L, bits), CertifiedReal(0L, bits))};
        for (auto [a, b] : orbit) {
            auto z1 = detail::root_of_unity(a, r1.root_degree(), bits);
            auto z2 = detail::root_of_unity(b, r2.root_degree(), bits);
            ComplexInterval s1(z1.re * x1, z1.im * x1);
            ComplexInterval z = op == ExprOp::Sum ? s1 + ComplexInterval(z2.re * x2 * t, z2.im * x2 * t)
                                                  : s1 * ComplexInterval(z2.re * x2, z2.im * x2);
            std::vector<ComplexInterval> next(poly.size() + 1,
                                              ComplexInterval(CertifiedReal(0L, bits), CertifiedReal(0L, bits)));
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k + 1] = next[k + 1] + poly[k];
                next[k] = next[k] - poly[k] * z;
            }
            poly = std::move(next);
        }
        auto rounded = detail::round_coefficients(poly);
        if (!rounded) {
            continue;
        }
        IntPolynomial m = squarefree_part(*rounded);
        IntPolynomial result = scale_roots(m, Rational(BigInt(1), t));
        if (n % static_cast<std::size_t>(result.degree()) != 0) {
            throw Error("internal: minimal polynomial degree does not divide the orbit size");
        }
        try {
            (void)exact_divide(annihilator, result);
        } catch (const InvalidArgument&) {
            throw Error("internal: minimal polynomial candidate " + to_string(result) + " does not divide the annihilator");
        }
        return result;
    }
    throw PrecisionExhausted("minimal_poly: coefficient rounding not certified at the precision cap");
}

/// Weil height via the oracle's minimal polynomial.
inline CertifiedReal oracle_height(const RadicalExpr& e, mpfr_prec_t precision = 128, const PrecisionLadder& ladder = {},
                                   unsigned long cap = 256) {
    auto m = minimal_poly(e, ladder, cap);
    if (m.degree() == 1 && m.coeff(0) == 0) {
        return CertifiedReal(0L, precision);
    }
    return height_from_minpoly(m, precision);
}

/// Real value of e, for numerical checks.
inline CertifiedReal evaluate(const RadicalExpr& e, mpfr_prec_t bits) {
    auto value = [&](const Term& t) {
        auto r = t.as_radical();
        return r ? detail::real_root(r->base(), r->root_degree(), bits) : CertifiedReal(0L, bits);
    };
    if (!e.op) {
        return value(e.lhs);
    }
    return *e.op == ExprOp::Sum ? value(e.lhs) + value(e.rhs) : value(e.lhs) * value(e.rhs);
}

struct CrossCheckRow {
    RadicalExpr expr;
    CertifiedReal height;
    bool holds = false;
};

struct CrossCheckReport {
    BigInt p, q, d;
    CertifiedReal bound;
    std::vector<CrossCheckRow> rows;

    bool all_hold() const {
        for (const auto& r : rows) {
            if (!r.holds) {
                return false;
            }
        }
        return !rows.empty();
    }
};

/// Elements of Q((p/q)^(1/d)) outside Q: scaled powers, shifted powers,
/// sums of two distinct powers and products of powers, in a fixed order.
inline std::vector<RadicalExpr> corollary_samples(const BigInt& p, const BigInt& q, unsigned long d, std::size_t count) {
    if (d < 2) {
        throw InvalidArgument("corollary samples need d >= 2");
    }
    auto power = [&](unsigned long k) {
        return Term{Rational(1), RadicalRational(pow(p, k), pow(q, k), d)};
    };
    auto scaled = [&](const Rational& c, unsigned long k) {
        Term t = power(k);
        t.coefficient = c;
        return t;
    };
    const Rational coefficients[] = {Rational(1), Rational(2), Rational(1, 3), Rational(5, 2), Rational(7)};
    const Rational shifts[] = {Rational(1), Rational(1, 2), Rational(3)};
    std::vector<RadicalExpr> out;
    auto add = [&](RadicalExpr e) {
        if (out.size() < count) {
            out.push_back(std::move(e));
        }
    };
    for (std::size_t round = 0; out.size() < count; ++round) {
        std::size_t before = out.size();
        for (unsigned long k = 1; k < d; ++k) {
            if (round < std::size(coefficients)) {
                add(RadicalExpr::single(scaled(coefficients[round], k)));
            }
            if (round < std::size(shifts)) {
                add(RadicalExpr::sum(power(k), Term{shifts[round], std::nullopt}));
            }
            unsigned long j = (k + round) % d;
            if (round >= 1 && j != 0 && j != k) {
                add(RadicalExpr::sum(scaled(coefficients[round % std::size(coefficients)], k), power(j)));
            }
            if (round >= 1 && j != 0 && (k + j) % d != 0) {
                add(RadicalExpr::product(power(k), power(j)));
            }
        }
        if (out.size() == before) {
            break;
        }
    }
    return out;
}

/// oracle_height(e) > log(p)/d - log(d)/(2(d-1)) for every sample, certified.
inline CrossCheckReport cross_check_corollary(const BigInt& p, const BigInt& q, const BigInt& d,
                                              const std::vector<RadicalExpr>& samples, mpfr_prec_t precision = 128,
                                              const PrecisionLadder& ladder = {}, unsigned long cap = 256) {
    CrossCheckReport r;
    r.p = p;
    r.q = q;
    r.d = d;
    r.bound = corollary_lower_bound(p, d, precision);
    for (const auto& e : samples) {
        CrossCheckRow row{e, oracle_height(e, precision, ladder, cap), false};
        row.holds = r.bound.certainly_less(row.height);
        r.rows.push_back(std::move(row));
    }
    return r;
}

} // namespace radnor
