#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numeric paths: logs and exps are exact rational
// series with explicit remainder bounds, resultants are Sylvester
// determinants over Q, root moduli come from long-double Durand-Kerner.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Range = std::pair<Q, Q>;

/// Rounds q outward to a dyadic with `bits` fractional bits to keep sizes small.
inline Q round_down(const Q& q, unsigned bits) {
    Z scaled;
    Q s = q;
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), bits);
    mpz_fdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    Q r(scaled);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

inline Q round_up(const Q& q, unsigned bits) {
    Z scaled;
    Q s = q;
    mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), bits);
    mpz_cdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    Q r(scaled);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), bits);
    return r;
}

/// 2*atanh(t) = log((1+t)/(1-t)) for 0 <= |t| <= 1/3, enclosed.
inline Range two_atanh(const Q& t, unsigned bits) {
    Q t2 = t * t;
    Q term = t;
    Q sum = 0;
    unsigned k = 0;
    // Remainder after terms 0..N-1 is at most 2|t|^(2N+1) / ((2N+1)(1-t^2)).
    Q eps(1);
    mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), bits + 8);
    for (;; ++k) {
        sum += term / Q(2 * k + 1);
        term *= t2;
        Q rem = 2 * abs(term) / (Q(2 * k + 3) * (1 - t2));
        if (rem < eps) {
            Q lo = 2 * sum - rem, hi = 2 * sum + rem;
            return {round_down(lo, bits + 4), round_up(hi, bits + 4)};
        }
    }
}

/// Enclosure of log(x), x > 0 rational, to about `bits` fractional bits.
inline Range log_range(const Q& x, unsigned bits = 200) {
    // x = 2^k * y with y in [2/3, 4/3].
    long k = 0;
    Q y = x;
    while (y > Q(4, 3)) {
        y /= 2;
        ++k;
    }
    while (y < Q(2, 3)) {
        y *= 2;
        --k;
    }
    auto ly = two_atanh((y - 1) / (y + 1), bits);
    auto l2 = two_atanh(Q(1, 3), bits); // log 2
    Q lo = ly.first + (k >= 0 ? Q(k) * l2.first : Q(k) * l2.second);
    Q hi = ly.second + (k >= 0 ? Q(k) * l2.second : Q(k) * l2.first);
    return {lo, hi};
}

/// Enclosure of exp(x) for rational x.
inline Range exp_range(const Q& x, unsigned bits = 200) {
    unsigned s = 0;
    Q r = x;
    while (abs(r) > Q(1, 2)) {
        r /= 2;
        ++s;
    }
    // Taylor to N terms; remainder <= 2 |r|^(N+1) / (N+1)! since e^|r| < 2.
    Q sum = 0, term = 1;
    Q eps(1);
    mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), bits + 16 + s);
    unsigned n = 0;
    for (;; ++n) {
        sum += term;
        term = term * r / Q(n + 1);
        Q rem = 2 * abs(term);
        if (rem < eps) {
            Q lo = round_down(sum - rem, bits + 16 + s);
            Q hi = round_up(sum + rem, bits + 16 + s);
            for (unsigned i = 0; i < s; ++i) {
                lo = round_down(lo * lo, bits + 16 + s);
                hi = round_up(hi * hi, bits + 16 + s);
            }
            return {lo, hi};
        }
    }
}

inline bool trial_division_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

/// det of the Sylvester matrix of f and g (constant-first coefficient lists).
inline Z sylvester_resultant(const std::vector<Z>& f, const std::vector<Z>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) {
        return 1;
    }
    std::vector<std::vector<Q>> a(size, std::vector<Q>(size, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t j = 0; j <= m; ++j) {
            a[r][r + j] = f[m - j];
        }
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j <= n; ++j) {
            a[n + r][r + j] = g[n - j];
        }
    }
    Q det = 1;
    for (std::size_t c = 0; c < size; ++c) {
        std::size_t piv = c;
        while (piv < size && a[piv][c] == 0) {
            ++piv;
        }
        if (piv == size) {
            return 0;
        }
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < size; ++r) {
            if (a[r][c] == 0) {
                continue;
            }
            Q factor = a[r][c] / a[c][c];
            for (std::size_t j = c; j < size; ++j) {
                a[r][j] -= factor * a[c][j];
            }
        }
    }
    return Z(det);
}

/// Roots by Durand-Kerner in long double; adequate for small, well separated cases.
inline std::vector<std::complex<long double>> durand_kerner(const std::vector<long double>& c) {
    using C = std::complex<long double>;
    const std::size_t n = c.size() - 1;
    std::vector<C> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = std::pow(C(0.4L, 0.9L), static_cast<long double>(i));
    }
    auto eval = [&](C x) {
        C acc = 0;
        for (std::size_t k = c.size(); k-- > 0;) {
            acc = acc * x + c[k] / c[n];
        }
        return acc;
    };
    for (int iter = 0; iter < 2000; ++iter) {
        for (std::size_t i = 0; i < n; ++i) {
            C denom = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) {
                    denom *= z[i] - z[j];
                }
            }
            z[i] -= eval(z[i]) / denom;
        }
    }
    return z;
}

/// log M from Durand-Kerner roots.
inline long double log_mahler_float(const std::vector<long double>& c) {
    long double s = std::log(std::fabs(c.back()));
    for (auto r : durand_kerner(c)) {
        s += std::max(0.0L, std::log(std::abs(r)));
    }
    return s;
}

} // namespace oracle
