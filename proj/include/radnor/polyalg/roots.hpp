#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "radnor/exactnum/transcendental.hpp"
#include "radnor/polyalg/complex_interval.hpp"
#include "radnor/polyalg/int_polynomial.hpp"

namespace radnor {

/// A disk {z : |z - center| <= radius} holding exactly one root.
struct RootDisk {
    Float center_re;
    Float center_im;
    Float radius;

    /// Enclosure of |root|.
    CertifiedReal modulus(mpfr_prec_t bits) const {
        auto c = ComplexInterval::point(center_re, center_im, bits).modulus();
        Float lo(bits), hi(bits);
        mpfr_sub(lo.get(), c.lo().get(), radius.get(), MPFR_RNDD);
        if (lo.sign() < 0) {
            mpfr_set_zero(lo.get(), 1);
        }
        mpfr_add(hi.get(), c.hi().get(), radius.get(), MPFR_RNDU);
        return CertifiedReal::hull(std::move(lo), std::move(hi), bits);
    }
};

namespace detail {

constexpr mpfr_prec_t kRootPrecisionLimit = mpfr_prec_t(1) << 16;

/// Approximate complex number at a fixed precision (round to nearest).
struct ApproxComplex {
    Float re;
    Float im;
    explicit ApproxComplex(mpfr_prec_t p) : re(p), im(p) {
        mpfr_set_zero(re.get(), 1);
        mpfr_set_zero(im.get(), 1);
    }
    void set_prec(mpfr_prec_t p) {
        mpfr_prec_round(re.get(), p, MPFR_RNDN);
        mpfr_prec_round(im.get(), p, MPFR_RNDN);
    }
};

/// Scratch space for approximate complex arithmetic at one precision.
class ComplexScratch {
public:
    explicit ComplexScratch(mpfr_prec_t p) : t1_(p), t2_(p), t3_(p), t4_(p) {}

    // r = a * b; r may alias a or b.
    void mul(ApproxComplex& r, const ApproxComplex& a, const ApproxComplex& b) {
        mpfr_mul(t1_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t2_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t3_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_mul(t4_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
        mpfr_sub(r.re.get(), t1_.get(), t2_.get(), MPFR_RNDN);
        mpfr_add(r.im.get(), t3_.get(), t4_.get(), MPFR_RNDN);
    }

    // r = a / b; r may alias a or b.
    void div(ApproxComplex& r, const ApproxComplex& a, const ApproxComplex& b) {
        mpfr_sqr(t1_.get(), b.re.get(), MPFR_RNDN);
        mpfr_sqr(t2_.get(), b.im.get(), MPFR_RNDN);
        mpfr_add(t1_.get(), t1_.get(), t2_.get(), MPFR_RNDN); // |b|^2
        mpfr_mul(t2_.get(), a.re.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t3_.get(), a.im.get(), b.im.get(), MPFR_RNDN);
        mpfr_add(t2_.get(), t2_.get(), t3_.get(), MPFR_RNDN);
        mpfr_mul(t3_.get(), a.im.get(), b.re.get(), MPFR_RNDN);
        mpfr_mul(t4_.get(), a.re.get(), b.im.get(), MPFR_RNDN);
        mpfr_sub(t3_.get(), t3_.get(), t4_.get(), MPFR_RNDN);
        mpfr_div(r.re.get(), t2_.get(), t1_.get(), MPFR_RNDN);
        mpfr_div(r.im.get(), t3_.get(), t1_.get(), MPFR_RNDN);
    }

    bool is_zero(const ApproxComplex& a) const { return a.re.is_zero() && a.im.is_zero(); }

    /// |a| as a double-precision magnitude estimate (log2 scale is enough).
    double log2_abs(const ApproxComplex& a) {
        mpfr_hypot(t1_.get(), a.re.get(), a.im.get(), MPFR_RNDN);
        if (mpfr_zero_p(t1_.get())) {
            return -1e300;
        }
        long e = 0;
        double m = mpfr_get_d_2exp(&e, t1_.get(), MPFR_RNDN);
        return std::log2(m) + static_cast<double>(e);
    }

private:
    Float t1_, t2_, t3_, t4_;
};

inline double log_abs(const BigInt& a) {
    long e = 0;
    double m = mpz_get_d_2exp(&e, a.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

/// Initial approximations on circles whose radii come from the upper convex
/// hull of (k, log|a_k|) (the Newton polygon); roots cluster near those radii.
inline std::vector<ApproxComplex> newton_polygon_guesses(const IntPolynomial& f, mpfr_prec_t prec) {
    const int n = f.degree();
    std::vector<int> idx;
    std::vector<double> lg;
    for (int k = 0; k <= n; ++k) {
        const auto& c = f.coefficients()[static_cast<std::size_t>(k)];
        if (c != 0) {
            double v = log_abs(c);
            while (idx.size() >= 2) {
                // Drop the middle point while it lies on or below the chord.
                std::size_t m = idx.size();
                double x1 = idx[m - 2], y1 = lg[m - 2], x2 = idx[m - 1], y2 = lg[m - 1];
                if ((y2 - y1) * (k - x1) <= (v - y1) * (x2 - x1)) {
                    idx.pop_back();
                    lg.pop_back();
                } else {
                    break;
                }
            }
            idx.push_back(k);
            lg.push_back(v);
        }
    }
    std::vector<ApproxComplex> z;
    z.reserve(static_cast<std::size_t>(n));
    const double sigma = 0.7;
    Float radius(prec), angle(prec), t(prec);
    for (std::size_t e = 0; e + 1 < idx.size(); ++e) {
        const int m = idx[e + 1] - idx[e];
        const double log_u = (lg[e] - lg[e + 1]) / m;
        mpfr_set_d(t.get(), log_u, MPFR_RNDN);
        mpfr_exp(radius.get(), t.get(), MPFR_RNDN);
        for (int j = 0; j < m; ++j) {
            double a = 2.0 * std::numbers::pi * j / m + 2.0 * std::numbers::pi * static_cast<double>(e) / n + sigma;
            ApproxComplex w(prec);
            mpfr_set_d(angle.get(), a, MPFR_RNDN);
            mpfr_cos(t.get(), angle.get(), MPFR_RNDN);
            mpfr_mul(w.re.get(), radius.get(), t.get(), MPFR_RNDN);
            mpfr_sin(t.get(), angle.get(), MPFR_RNDN);
            mpfr_mul(w.im.get(), radius.get(), t.get(), MPFR_RNDN);
            z.push_back(std::move(w));
        }
    }
    return z;
}

/// Aberth-Ehrlich simultaneous iteration at precision `prec`, in place.
/// Returns true when every relative correction fell below 2^(8 - prec).
inline bool aberth(const IntPolynomial& f, std::vector<ApproxComplex>& z, mpfr_prec_t prec, int max_iter) {
    const int n = f.degree();
    std::vector<Float> coeff;
    coeff.reserve(static_cast<std::size_t>(n) + 1);
    for (const auto& c : f.coefficients()) {
        coeff.push_back(Float::from(c, prec, MPFR_RNDN));
    }
    for (auto& w : z) {
        w.set_prec(prec);
    }
    ComplexScratch s(prec);
    ApproxComplex p(prec), dp(prec), ratio(prec), sum(prec), diff(prec), one_minus(prec), tmp(prec);
    std::vector<bool> settled(z.size(), false);
    const double tol = 8.0 - static_cast<double>(prec);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_small = true;
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (settled[i]) {
                continue;
            }
            // p(z_i), p'(z_i)
            mpfr_set(p.re.get(), coeff[static_cast<std::size_t>(n)].get(), MPFR_RNDN);
            mpfr_set_zero(p.im.get(), 1);
            mpfr_set_zero(dp.re.get(), 1);
            mpfr_set_zero(dp.im.get(), 1);
            for (int k = n - 1; k >= 0; --k) {
                s.mul(dp, dp, z[i]);
                mpfr_add(dp.re.get(), dp.re.get(), p.re.get(), MPFR_RNDN);
                mpfr_add(dp.im.get(), dp.im.get(), p.im.get(), MPFR_RNDN);
                s.mul(p, p, z[i]);
                mpfr_add(p.re.get(), p.re.get(), coeff[static_cast<std::size_t>(k)].get(), MPFR_RNDN);
            }
            if (s.is_zero(p)) {
                settled[i] = true;
                continue;
            }
            if (s.is_zero(dp)) {
                // Nudge off a critical point.
                mpfr_mul_d(z[i].re.get(), z[i].re.get(), 1.0001, MPFR_RNDN);
                mpfr_add_d(z[i].im.get(), z[i].im.get(), 1e-3, MPFR_RNDN);
                all_small = false;
                continue;
            }
            s.div(ratio, p, dp);
            mpfr_set_zero(sum.re.get(), 1);
            mpfr_set_zero(sum.im.get(), 1);
            ApproxComplex one(prec);
            mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j == i) {
                    continue;
                }
                mpfr_sub(diff.re.get(), z[i].re.get(), z[j].re.get(), MPFR_RNDN);
                mpfr_sub(diff.im.get(), z[i].im.get(), z[j].im.get(), MPFR_RNDN);
                if (s.is_zero(diff)) {
                    continue;
                }
                s.div(tmp, one, diff);
                mpfr_add(sum.re.get(), sum.re.get(), tmp.re.get(), MPFR_RNDN);
                mpfr_add(sum.im.get(), sum.im.get(), tmp.im.get(), MPFR_RNDN);
            }
            // correction = ratio / (1 - ratio * sum)
            s.mul(tmp, ratio, sum);
            mpfr_ui_sub(one_minus.re.get(), 1, tmp.re.get(), MPFR_RNDN);
            mpfr_neg(one_minus.im.get(), tmp.im.get(), MPFR_RNDN);
            if (!s.is_zero(one_minus)) {
                s.div(ratio, ratio, one_minus);
            }
            mpfr_sub(z[i].re.get(), z[i].re.get(), ratio.re.get(), MPFR_RNDN);
            mpfr_sub(z[i].im.get(), z[i].im.get(), ratio.im.get(), MPFR_RNDN);
            double rel = s.log2_abs(ratio) - s.log2_abs(z[i]);
            if (rel > tol) {
                all_small = false;
            } else {
                settled[i] = true;
            }
        }
        if (all_small) {
            return true;
        }
    }
    return false;
}

/// Certified disks around the approximations, or empty if they overlap.
///
/// With Weierstrass corrections w_i = f(z_i) / (lc * prod_{j != i} (z_i - z_j)),
/// the roots of f are the eigenvalues of diag(z) - w 1^T, so by Gershgorin they
/// lie in the union of disks D(z_i - w_i, (n-1)|w_i|) and each connected
/// component holds as many roots as disks. The disks D(z_i, n|w_i|) contain
/// those; if they are pairwise disjoint, each holds exactly one root.
inline std::vector<RootDisk> certify_disks(const IntPolynomial& f, const std::vector<ApproxComplex>& z,
                                           mpfr_prec_t bits) {
    const std::size_t n = z.size();
    std::vector<ComplexInterval> pts;
    pts.reserve(n);
    for (const auto& w : z) {
        pts.push_back(ComplexInterval::point(w.re, w.im, bits));
    }
    const CertifiedReal zero(0L, bits);
    const ComplexInterval lc{CertifiedReal(f.lc(), bits), zero};
    std::vector<RootDisk> disks;
    disks.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexInterval value{zero, zero};
        for (int k = f.degree(); k >= 0; --k) {
            value = value * pts[i] + ComplexInterval{CertifiedReal(f.coeff(static_cast<std::size_t>(k)), bits), zero};
        }
        ComplexInterval denom = lc;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                denom = denom * (pts[i] - pts[j]);
            }
        }
        if (denom.squared_modulus().contains_zero()) {
            return {};
        }
        CertifiedReal correction = (value / denom).modulus() * static_cast<long>(n);
        disks.push_back(RootDisk{z[i].re, z[i].im, correction.hi()});
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            CertifiedReal gap2 = (pts[i] - pts[j]).squared_modulus();
            CertifiedReal reach = CertifiedReal::hull(disks[i].radius, disks[i].radius, bits) +
                                  CertifiedReal::hull(disks[j].radius, disks[j].radius, bits);
            if (!pow(reach, 2UL).certainly_less(gap2)) {
                return {};
            }
        }
    }
    return disks;
}

} // namespace detail

/// Isolating disks for every complex root of a squarefree f with deg f >= 1.
/// Precision escalates until the disks are disjoint and each radius is below
/// 2^-precision times max(1, |center|).
inline std::vector<RootDisk> isolate_roots(const IntPolynomial& f, mpfr_prec_t precision) {
    if (f.degree() < 1) {
        throw InvalidArgument("isolate_roots needs degree >= 1");
    }
    if (!is_squarefree(f)) {
        throw NotSquarefree("polynomial is not squarefree: " + to_string(f));
    }
    if (f.coeff(0) == 0) {
        // Squarefree, so x divides f once: the root 0 is exact.
        std::vector<BigInt> shifted(f.coefficients().begin() + 1, f.coefficients().end());
        std::vector<RootDisk> disks;
        if (f.degree() > 1) {
            disks = isolate_roots(IntPolynomial(std::move(shifted)), precision);
        }
        Float zero = Float::from(0L);
        disks.push_back(RootDisk{zero, zero, zero});
        return disks;
    }
    mpfr_prec_t w = std::max<mpfr_prec_t>(precision + 32, 96);
    auto z = detail::newton_polygon_guesses(f, w);
    for (; w <= detail::kRootPrecisionLimit; w *= 2) {
        detail::aberth(f, z, w, 60 + 4 * f.degree());
        auto disks = detail::certify_disks(f, z, w);
        if (disks.empty()) {
            continue;
        }
        bool narrow = true;
        for (const auto& d : disks) {
            Float scale(w);
            mpfr_hypot(scale.get(), d.center_re.get(), d.center_im.get(), MPFR_RNDD);
            if (compare(scale, BigInt(1)) < 0) {
                mpfr_set_ui(scale.get(), 1, MPFR_RNDN);
            }
            mpfr_mul_2si(scale.get(), scale.get(), -static_cast<long>(precision), MPFR_RNDD);
            if (d.radius > scale) {
                narrow = false;
                break;
            }
        }
        if (narrow) {
            return disks;
        }
    }
    throw PrecisionExhausted("root isolation did not converge for " + to_string(f));
}

} // namespace radnor
