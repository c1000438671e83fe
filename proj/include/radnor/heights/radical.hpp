#pragma once

#include <numeric>
#include <optional>
#include <ostream>
#include <string>

#include "radnor/exactnum/exact_log.hpp"
#include "radnor/polyalg/int_polynomial.hpp"
#include "radnor/polyalg/irreducibility.hpp"

namespace radnor {

/// The positive real number (m/n)^(1/D), kept with gcd(m, n) = 1 and D minimal.
class RadicalRational {
public:
    RadicalRational() : num_(1), den_(1), root_degree_(1) {}

    RadicalRational(BigInt num, BigInt den, unsigned long root_degree)
        : num_(std::move(num)), den_(std::move(den)), root_degree_(root_degree) {
        if (num_ <= 0 || den_ <= 0 || root_degree_ == 0) {
            throw InvalidArgument("radical needs positive m, n and D");
        }
        canonicalize();
    }

    RadicalRational(const Rational& base, unsigned long root_degree)
        : RadicalRational(base.get_num(), base.get_den(), root_degree) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    unsigned long root_degree() const { return root_degree_; }
    Rational base() const { return Rational(num_, den_); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_rational() const { return root_degree_ == 1; }

    /// n x^D - m, the minimal polynomial once canonical.
    IntPolynomial minimal_polynomial() const {
        std::vector<BigInt> c(root_degree_ + 1, BigInt(0));
        c.front() = -num_;
        c.back() = den_;
        return IntPolynomial(std::move(c));
    }

    std::string to_string() const {
        std::string base = den_ == 1 ? num_.get_str() : num_.get_str() + "/" + den_.get_str();
        if (root_degree_ == 1) {
            return base;
        }
        if (den_ != 1) {
            base = "(" + base + ")";
        }
        return base + "^(1/" + std::to_string(root_degree_) + ")";
    }

    friend bool operator==(const RadicalRational&, const RadicalRational&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RadicalRational& r) { return os << r.to_string(); }

private:
    void canonicalize() {
        BigInt g = gcd(num_, den_);
        num_ /= g;
        den_ /= g;
        if (num_ == 1 && den_ == 1) {
            root_degree_ = 1;
            return;
        }
        std::vector<unsigned long> primes;
        unsigned long rest = root_degree_;
        for (unsigned long p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                primes.push_back(p);
                while (rest % p == 0) {
                    rest /= p;
                }
            }
        }
        if (rest > 1) {
            primes.push_back(rest);
        }
        unsigned long d = root_degree_;
        for (unsigned long p : primes) {
            while (d % p == 0) {
                auto m = exact_root(num_, p);
                auto n = m ? exact_root(den_, p) : std::nullopt;
                if (!n) {
                    break;
                }
                num_ = *m;
                den_ = *n;
                d /= p;
            }
        }
        root_degree_ = d;
    }

    BigInt num_;
    BigInt den_;
    unsigned long root_degree_;
};

/// Accepts "(m/n)^(1/D)", "m^(1/D)", "(m)^(1/D)", "m/n" and "m".
inline RadicalRational parse_radical(std::string_view text) {
    auto s = detail::trim(text);
    auto fail = [&]() { return ParseError("not a radical: '" + std::string(text) + "'"); };
    std::string_view base = s;
    unsigned long root_degree = 1;
    if (auto caret = s.find('^'); caret != std::string_view::npos) {
        base = detail::trim(s.substr(0, caret));
        auto exponent = detail::trim(s.substr(caret + 1));
        if (exponent.size() < 5 || exponent.substr(0, 3) != "(1/" || exponent.back() != ')') {
            throw fail();
        }
        auto d = detail::trim(exponent.substr(3, exponent.size() - 4));
        if (!detail::all_digits(d)) {
            throw fail();
        }
        BigInt dz(std::string(d), 10);
        if (dz == 0 || !dz.fits_ulong_p()) {
            throw fail();
        }
        root_degree = dz.get_ui();
        if (base.size() >= 2 && base.front() == '(' && base.back() == ')') {
            base = detail::trim(base.substr(1, base.size() - 2));
        }
    }
    if (base.find('.') != std::string_view::npos) {
        throw fail();
    }
    Rational q = parse_rational(base);
    if (q <= 0) {
        throw InvalidArgument("radical base must be positive: '" + std::string(text) + "'");
    }
    return RadicalRational(q, root_degree);
}

/// h((m/n)^(1/D)) = h(m/n)/D = log max(m, n)/D.
inline ExactLog height(const RadicalRational& r) {
    return ExactLog(r.num() > r.den() ? r.num() : r.den(), BigInt(static_cast<unsigned long>(r.root_degree())));
}

inline unsigned long degree(const RadicalRational& r) { return capelli_degree(r.base(), r.root_degree()); }

struct WeightedHeightValue {
    std::optional<ExactLog> exact;
    CertifiedReal enclosure;
    Rational gamma;
    unsigned long degree = 1;
};

/// deg^gamma * h; exact whenever gamma is 0 or 1.
inline WeightedHeightValue weighted_height(const RadicalRational& r, const Rational& gamma, mpfr_prec_t precision = 128) {
    WeightedHeightValue out;
    out.gamma = gamma;
    out.degree = degree(r);
    ExactLog h = height(r);
    if (gamma == 0) {
        out.exact = h;
    } else if (gamma == 1) {
        out.exact = h.scaled(BigInt(out.degree));
    }
    if (out.exact) {
        out.enclosure = out.exact->enclosure(precision);
    } else if (h.is_zero() || out.degree == 1) {
        out.enclosure = h.enclosure(precision);
    } else {
        mpfr_prec_t bits = precision + 16;
        auto w = pow(CertifiedReal(static_cast<long>(out.degree), bits), gamma);
        out.enclosure = (w * h.enclosure(bits)).with_bits(precision);
    }
    return out;
}

inline RadicalRational product_as_radical(const RadicalRational& a, const RadicalRational& b) {
    unsigned long l = std::lcm(a.root_degree(), b.root_degree());
    unsigned long ea = l / a.root_degree();
    unsigned long eb = l / b.root_degree();
    return RadicalRational(pow(a.num(), ea) * pow(b.num(), eb), pow(a.den(), ea) * pow(b.den(), eb), l);
}

} // namespace radnor
