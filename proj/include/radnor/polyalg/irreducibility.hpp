#pragma once

#include <set>

#include "radnor/polyalg/int_polynomial.hpp"

namespace radnor {

/// The candidates p for which f is p-Eisenstein: p divides every non-leading
/// coefficient and p^2 does not divide the constant term. f must be monic.
inline std::set<BigInt> eisenstein_primes(const IntPolynomial& f, const std::set<BigInt>& candidates) {
    if (f.degree() < 1 || f.lc() != 1) {
        throw NotMonic("eisenstein_primes needs a monic polynomial of degree >= 1, got " + to_string(f));
    }
    std::set<BigInt> out;
    const auto& c = f.coefficients();
    for (const auto& p : candidates) {
        bool ok = !divides(p * p, c[0]);
        for (std::size_t i = 0; ok && i + 1 < c.size(); ++i) {
            ok = divides(p, c[i]);
        }
        if (ok) {
            out.insert(p);
        }
    }
    return out;
}

/// Degree over Q of the positive real root (m/n)^(1/D).
///
/// Strips the largest g | D for which m/n is a g-th power. What remains is
/// x^(D/g) - a with a positive and not a p-th power for any prime p | D/g, and
/// since -4c^4 < 0 < a, Capelli's criterion makes it irreducible.
inline unsigned long capelli_degree(const Rational& base, unsigned long root_degree) {
    if (base <= 0 || root_degree == 0) {
        throw InvalidArgument("capelli_degree needs a positive base and D >= 1");
    }
    for (unsigned long g = root_degree; g >= 1; --g) {
        if (root_degree % g == 0 && exact_root(base, g)) {
            return root_degree / g;
        }
    }
    return root_degree;
}

} // namespace radnor
