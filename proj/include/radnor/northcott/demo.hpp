#pragma once

#include <string>
#include <vector>

#include "radnor/heights/radical.hpp"

namespace radnor {

struct DemoRow {
    unsigned long n = 0;
    RadicalRational a;          // 2^(1/3^n)
    Rational a_exponent;        // h_gamma(a_n) = log 2 * 3^a_exponent
    CertifiedReal h_gamma_a;
    RadicalRational product;    // b a_n
    CertifiedReal h_gamma_product;
    CertifiedReal chain_bound;  // deg(b)^(-gamma) (h(b) deg(a_n)^gamma + h_gamma(a_n))
    bool chain_holds = false;
    bool decreasing = true;     // h_gamma(a_n) < h_gamma(a_{n-1}); true for n = 1
};

struct DemoTable {
    Rational gamma;
    RadicalRational b;
    std::vector<DemoRow> rows;

    bool all_chain_hold() const {
        for (const auto& r : rows) {
            if (!r.chain_holds) {
                return false;
            }
        }
        return true;
    }

    bool strictly_decreasing() const {
        for (const auto& r : rows) {
            if (!r.decreasing) {
                return false;
            }
        }
        return true;
    }
};

inline RadicalRational default_demo_b() { return RadicalRational(BigInt(5), BigInt(7), 5); }

/// For gamma <= 0 the weighted heights of a_n = 2^(1/3^n) tend to 0 while
/// h_gamma(b a_n) stays under the chain bound.
inline DemoTable demo_nonpositive(const Rational& gamma, unsigned long n_max, const RadicalRational& b = default_demo_b(),
                                  mpfr_prec_t precision = 128) {
    if (gamma > 0) {
        throw InvalidArgument("demo_nonpositive needs gamma <= 0");
    }
    if (n_max == 0 || n_max > 40) {
        throw InvalidArgument("demo_nonpositive needs 1 <= n <= 40");
    }
    if (b.is_one()) {
        throw InvalidArgument("demo_nonpositive needs b != 1");
    }
    DemoTable t;
    t.gamma = gamma;
    t.b = b;
    mpfr_prec_t bits = precision + 16;
    auto log2 = log_interval(BigInt(2), bits);
    auto deg_b = CertifiedReal(BigInt(degree(b)), bits);
    auto hb = height(b);
    for (unsigned long n = 1; n <= n_max; ++n) {
        DemoRow row;
        row.n = n;
        BigInt three_n = pow(BigInt(3), n);
        row.a = RadicalRational(BigInt(2), BigInt(1), three_n.get_ui());
        row.a_exponent = Rational(static_cast<long>(n)) * (gamma - 1);
        auto three_pow = pow(CertifiedReal(3L, bits), row.a_exponent);
        row.h_gamma_a = (log2 * three_pow).with_bits(precision);
        row.product = product_as_radical(b, row.a);
        auto wp = weighted_height(row.product, gamma, bits);
        row.h_gamma_product = wp.enclosure.with_bits(precision);
        auto deg_a_gamma = pow(CertifiedReal(three_n, bits), gamma);
        auto chain = pow(deg_b, -gamma) * (hb.enclosure(bits) * deg_a_gamma + row.h_gamma_a.with_bits(bits));
        row.chain_bound = chain.with_bits(precision);
        if (gamma == 0) {
            // h(b a_n) <= h(b) + h(a_n), compared exactly
            const BigInt& db = hb.divisor();
            BigInt l = lcm(db, three_n);
            ExactLog sum(pow(hb.argument(), BigInt(l / db).get_ui()) * pow(BigInt(2), BigInt(l / three_n).get_ui()), l);
            row.chain_holds = *wp.exact <= sum;
        } else {
            row.chain_holds = wp.enclosure.certainly_less(chain);
        }
        if (!t.rows.empty()) {
            row.decreasing = row.h_gamma_a.certainly_less(t.rows.back().h_gamma_a);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

} // namespace radnor
