#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "radnor/exactnum/certify.hpp"
#include "radnor/exactnum/transcendental.hpp"

namespace radnor {

/// log(argument) / divisor, kept symbolic. Heights of radical rationals are
/// always of this shape, so comparisons between them are decidable in integers.
class ExactLog {
public:
    ExactLog() : argument_(1), divisor_(1) {}

    ExactLog(BigInt argument, BigInt divisor) : argument_(std::move(argument)), divisor_(std::move(divisor)) {
        if (argument_ <= 0 || divisor_ <= 0) {
            throw InvalidArgument("ExactLog needs a positive argument and divisor");
        }
        if (argument_ == 1) {
            divisor_ = 1;
        }
    }

    const BigInt& argument() const { return argument_; }
    const BigInt& divisor() const { return divisor_; }
    bool is_zero() const { return argument_ == 1; }

    CertifiedReal enclosure(mpfr_prec_t precision) const {
        if (is_zero()) {
            return CertifiedReal(0L, precision);
        }
        auto l = log_interval(argument_, precision + 4);
        return divisor_ == 1 ? l.with_bits(precision) : (l / divisor_).with_bits(precision);
    }

    /// k * value, keeping the divisor as small as possible.
    ExactLog scaled(const BigInt& k) const {
        if (k <= 0) {
            throw InvalidArgument("ExactLog can only be scaled by a positive integer");
        }
        BigInt g = gcd(k, divisor_);
        BigInt rest = k / g;
        if (!rest.fits_ulong_p()) {
            throw InvalidArgument("ExactLog scale factor too large");
        }
        return ExactLog(pow(argument_, rest.get_ui()), divisor_ / g);
    }

    /// log(a)/m vs log(b)/n reduces to a^(n/g) vs b^(m/g), g = gcd(m, n).
    friend std::strong_ordering operator<=>(const ExactLog& x, const ExactLog& y) {
        if (x.is_zero() || y.is_zero()) {
            return (x.is_zero() ? 0 : 1) <=> (y.is_zero() ? 0 : 1);
        }
        BigInt g = gcd(x.divisor_, y.divisor_);
        BigInt ex = y.divisor_ / g;
        BigInt ey = x.divisor_ / g;
        double bits = static_cast<double>(bit_length(x.argument_)) * ex.get_d() +
                      static_cast<double>(bit_length(y.argument_)) * ey.get_d();
        if (bits < 1e8 && ex.fits_ulong_p() && ey.fits_ulong_p()) {
            BigInt lhs = pow(x.argument_, ex.get_ui());
            BigInt rhs = pow(y.argument_, ey.get_ui());
            int c = cmp(lhs, rhs);
            return c < 0 ? std::strong_ordering::less
                         : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
        }
        // Powers too large to form; unequal values separate numerically.
        auto refine = [&](mpfr_prec_t bits) { return EnclosurePair(x.enclosure(bits), y.enclosure(bits)); };
        if (certified_less(refine)) {
            return std::strong_ordering::less;
        }
        auto swapped = [&](mpfr_prec_t bits) { return EnclosurePair(y.enclosure(bits), x.enclosure(bits)); };
        return certified_less(swapped) ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend bool operator==(const ExactLog& x, const ExactLog& y) { return (x <=> y) == 0; }

    std::string to_string() const {
        if (is_zero()) {
            return "0";
        }
        std::string s = "log(" + argument_.get_str() + ")";
        return divisor_ == 1 ? s : s + "/" + divisor_.get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactLog& x) { return os << x.to_string(); }

private:
    BigInt argument_;
    BigInt divisor_;
};

} // namespace radnor
