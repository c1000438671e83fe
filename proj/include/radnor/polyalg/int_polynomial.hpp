#pragma once

#include <set>
#include <sstream>
#include <string>
#include <string_view>

#include "radnor/polyalg/dense_poly.hpp"

namespace radnor {

/// Integer polynomial, constant term first.
using IntPolynomial = DensePoly<BigInt>;

/// gcd of the coefficients (0 for the zero polynomial), always nonnegative.
inline BigInt content(const IntPolynomial& f) {
    BigInt g(0);
    for (const auto& c : f.coefficients()) {
        g = gcd(g, c);
        if (g == 1) {
            break;
        }
    }
    return g;
}

/// Content 1 and positive leading coefficient.
inline IntPolynomial primitive_part(const IntPolynomial& f) {
    if (f.is_zero()) {
        return f;
    }
    BigInt c = content(f);
    if (f.lc() < 0) {
        c = -c;
    }
    return exact_divide(f, c);
}

/// Primitive gcd over Z[x] (positive leading coefficient), via a primitive
/// remainder sequence. The integer content of the gcd is included.
inline IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero()) {
        return primitive_part(g) * content(g);
    }
    if (g.is_zero()) {
        return primitive_part(f) * content(f);
    }
    BigInt cont = gcd(content(f), content(g));
    IntPolynomial a = primitive_part(f);
    IntPolynomial b = primitive_part(g);
    if (a.degree() < b.degree()) {
        std::swap(a, b);
    }
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a) * cont;
}

inline bool is_squarefree(const IntPolynomial& f) {
    if (f.degree() <= 0) {
        return true;
    }
    return gcd(f, f.derivative()).degree() == 0;
}

/// f / gcd(f, f'), primitive.
inline IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.degree() <= 0) {
        return primitive_part(f);
    }
    return primitive_part(exact_divide(primitive_part(f), primitive_part(gcd(f, f.derivative()))));
}

/// Discriminant (-1)^(n(n-1)/2) res(f, f') / lc(f).
inline BigInt discriminant(const IntPolynomial& f) {
    const int n = f.degree();
    if (n < 2) {
        throw InvalidArgument("discriminant needs degree >= 2");
    }
    BigInt r = exact_divide(resultant(f, f.derivative()), f.lc());
    return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? r : BigInt(-r);
}

/// f(x + shift) for a rational shift, scaled to a primitive integer polynomial.
inline IntPolynomial taylor_shift(const IntPolynomial& f, const Rational& shift) {
    // Substitute x -> (den*x + num)/den and clear den^deg.
    const BigInt num = shift.get_num();
    const BigInt den = shift.get_den();
    const IntPolynomial lin{num, den};
    IntPolynomial acc;
    const int n = f.degree();
    for (int k = n; k >= 0; --k) {
        acc = acc * lin + IntPolynomial{f.coeff(static_cast<std::size_t>(k)) * pow(den, static_cast<unsigned long>(n - k))};
    }
    return primitive_part(acc);
}

/// f(x / scale) * scale_num^deg..., i.e. a primitive polynomial whose roots are
/// scale times the roots of f.
inline IntPolynomial scale_roots(const IntPolynomial& f, const Rational& scale) {
    if (scale == 0) {
        throw InvalidArgument("scale_roots by zero");
    }
    // root y = s*x  =>  x = y/s = y*den/num ; multiply through by num^n.
    const BigInt num = scale.get_num();
    const BigInt den = scale.get_den();
    const int n = f.degree();
    std::vector<BigInt> v;
    for (int k = 0; k <= n; ++k) {
        v.push_back(f.coeff(static_cast<std::size_t>(k)) * pow(den, static_cast<unsigned long>(k)) *
                    pow(num, static_cast<unsigned long>(n - k)));
    }
    return primitive_part(IntPolynomial(std::move(v)));
}

/// Parses the comma-separated, constant-first coefficient list "-12005,0,0,0,0,1".
inline IntPolynomial parse_polynomial(std::string_view text) {
    std::vector<BigInt> v;
    std::size_t start = 0;
    if (detail::trim(text).empty()) {
        throw ParseError("empty polynomial");
    }
    for (;;) {
        std::size_t comma = text.find(',', start);
        v.push_back(parse_bigint(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return IntPolynomial(std::move(v));
}

/// Inverse of parse_polynomial ("0" for the zero polynomial).
inline std::string format_coefficients(const IntPolynomial& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += f.coefficients()[i].get_str();
    }
    return out;
}

/// Human-readable form, highest degree first: "7*x^5 - 5".
inline std::string to_string(const IntPolynomial& f) {
    if (f.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int k = f.degree(); k >= 0; --k) {
        BigInt c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) {
            continue;
        }
        if (first) {
            if (c < 0) {
                os << "-";
            }
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) {
                os << a.get_str() << "*";
            }
            os << "x";
            if (k > 1) {
                os << "^" << k;
            }
        }
        first = false;
    }
    return os.str();
}

} // namespace radnor
