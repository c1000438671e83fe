#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "radnor/heights/radical.hpp"
#include "radnor/northcott/bounds.hpp"
#include "radnor/towers/classify.hpp"
#include "radnor/towers/tower_spec.hpp"

namespace radnor {

struct LevelBounds {
    CertifiedReal lower; // d^delta (log p / d - log d / (2(d-1)))
    CertifiedReal upper; // log q / d^(1-delta)
    std::optional<ExactLog> upper_exact;
};

inline LevelBounds level_bounds(const TowerSpec& spec, std::size_t index, const Rational& delta,
                                mpfr_prec_t precision = 128) {
    if (index >= spec.levels.size()) {
        throw InvalidArgument("level " + std::to_string(index + 1) + " does not exist");
    }
    const auto& l = spec.levels[index];
    if (!(l.p < l.q)) {
        throw InvalidArgument("level " + std::to_string(index + 1) + " needs p < q");
    }
    mpfr_prec_t bits = precision + 16;
    LevelBounds out;
    auto weight = detail::power_of(l.d, delta, bits);
    out.lower = (weight * corollary_lower_bound(l.p, l.d, bits)).with_bits(precision);
    // h_delta((p/q)^(1/d)) with deg = d
    auto lift = detail::power_of(l.d, delta - 1, bits);
    out.upper = (log_interval(l.q, bits) * lift).with_bits(precision);
    if (delta == 0) {
        out.upper_exact = ExactLog(l.q, l.d);
    } else if (delta == 1) {
        out.upper_exact = ExactLog(l.q, BigInt(1));
    }
    return out;
}

enum class Verdict { ConvergesTo, DivergesToInfinity, CollapsesToZero };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::ConvergesTo: return "ConvergesTo";
    case Verdict::DivergesToInfinity: return "DivergesToInfinity";
    case Verdict::CollapsesToZero: return "CollapsesToZero";
    }
    return "?";
}

struct NorthcottLevel {
    TowerLevel level;
    CertifiedReal lower;
    CertifiedReal upper;
    bool lower_below_upper = false; // certified, or lower is vacuous (<= 0)
};

struct NorthcottReport {
    WeightCase weight;
    Rational delta;
    std::vector<NorthcottLevel> levels;
    std::size_t tail_begin = 0; // levels [tail_begin, n) form the sandwich suffix
    CertifiedReal estimate;     // [min tail lowers, min tail uppers]
    Verdict predicted = Verdict::ConvergesTo;
    std::optional<Rational> target; // c for ConvergesTo
    bool consistent = false;
    std::vector<std::string> evidence;

    std::string verdict_string() const {
        std::string v = to_string(predicted);
        if (target) {
            v += "(" + radnor::to_string(*target) + ")";
        }
        return v;
    }
};

/// The limit behaviour of Nor_delta predicted for the case.
inline std::pair<Verdict, std::optional<Rational>> predicted_verdict(const WeightCase& w, const Rational& delta) {
    if (delta < w.gamma) {
        return {Verdict::CollapsesToZero, std::nullopt};
    }
    if (delta > w.gamma) {
        return {Verdict::DivergesToInfinity, std::nullopt};
    }
    switch (w.tag) {
    case CaseTag::A:
    case CaseTag::B2: return {Verdict::ConvergesTo, *w.c};
    case CaseTag::B1: return {Verdict::CollapsesToZero, std::nullopt};
    default: return {Verdict::DivergesToInfinity, std::nullopt};
    }
}

namespace detail {

/// g with f(d) d^(-gamma) = g(d) d^(-gamma) in the proof's chains; for A this is f(d)/d at gamma = 0.
inline CertifiedReal chain_g(const WeightCase& w, const BigInt& d, mpfr_prec_t bits) {
    auto f = f_eval(w, d, bits);
    return w.tag == CaseTag::A ? f / d : f;
}

/// d^(delta-gamma) (g(d) - d^gamma log d / (2(d-1))): the proof's lower chain floor.
inline CertifiedReal chain_floor(const WeightCase& w, const BigInt& d, const Rational& delta, mpfr_prec_t bits) {
    auto inner = chain_g(w, d, bits) - power_of(d, w.gamma, bits) * silverman_term(d, bits);
    return power_of(d, delta - w.gamma, bits) * inner;
}

/// log 4 / d^(1-delta) + g(d) d^(delta-gamma): the proof's upper envelope.
inline CertifiedReal upper_envelope(const WeightCase& w, const BigInt& d, const Rational& delta, mpfr_prec_t bits) {
    if (w.tag == CaseTag::C) {
        return log_interval(BigInt(2 * d), bits) * power_of(d, delta - 1, bits);
    }
    return log_interval(BigInt(4), bits) * power_of(d, delta - 1, bits) +
           chain_g(w, d, bits) * power_of(d, delta - w.gamma, bits);
}

template <class Value>
bool strictly_monotone(const std::vector<Value>& xs, bool increasing) {
    for (std::size_t i = 1; i < xs.size(); ++i) {
        bool ok = increasing ? xs[i - 1].certainly_less(xs[i]) : xs[i].certainly_less(xs[i - 1]);
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace detail

/// Per-level lower/upper bounds, the suffix sandwich, and whether the finite
/// trend is consistent with the predicted limit behaviour.
inline NorthcottReport northcott_sandwich(const TowerSpec& spec, const Rational& delta, mpfr_prec_t precision = 128) {
    if (spec.levels.empty()) {
        throw InvalidArgument("northcott_sandwich needs at least one level");
    }
    NorthcottReport r;
    r.weight = spec.weight;
    r.delta = delta;
    std::size_t n = spec.levels.size();
    for (std::size_t i = 0; i < n; ++i) {
        auto b = level_bounds(spec, i, delta, precision);
        bool ordered = !b.lower.certainly_positive() || b.lower.certainly_less_equal(b.upper);
        r.levels.push_back({spec.levels[i], b.lower, b.upper, ordered});
    }
    r.tail_begin = n - (n + 1) / 2;
    CertifiedReal lo = r.levels[r.tail_begin].lower;
    CertifiedReal hi = r.levels[r.tail_begin].upper;
    for (std::size_t i = r.tail_begin + 1; i < n; ++i) {
        lo = min(lo, r.levels[i].lower);
        hi = min(hi, r.levels[i].upper);
    }
    r.estimate = CertifiedReal::hull(lo.lo(), hi.hi(), precision);

    std::tie(r.predicted, r.target) = predicted_verdict(spec.weight, delta);
    mpfr_prec_t bits = precision;
    bool ordered = true;
    for (const auto& l : r.levels) {
        ordered = ordered && l.lower_below_upper;
    }
    r.evidence.push_back(std::string("lower <= upper at every level: ") + (ordered ? "yes" : "no"));
    bool trend = false;
    switch (r.predicted) {
    case Verdict::ConvergesTo: {
        auto c = CertifiedReal::from_rational(*r.target, bits);
        bool above = true;
        std::vector<CertifiedReal> gaps;
        for (const auto& l : r.levels) {
            above = above && c.certainly_less(l.lower);
            gaps.push_back(l.upper - c);
        }
        bool shrinking = detail::strictly_monotone(gaps, false);
        r.evidence.push_back(std::string("every lower > c: ") + (above ? "yes" : "no"));
        r.evidence.push_back(std::string("upper - c strictly decreasing: ") + (shrinking ? "yes" : "no"));
        trend = above && shrinking;
        break;
    }
    case Verdict::DivergesToInfinity: {
        std::vector<CertifiedReal> xs;
        for (const auto& l : r.levels) {
            xs.push_back(spec.weight.tag == CaseTag::C ? l.upper : detail::chain_floor(spec.weight, l.level.d, delta, bits));
        }
        trend = detail::strictly_monotone(xs, true);
        r.evidence.push_back(std::string(spec.weight.tag == CaseTag::C ? "uppers" : "lower chain floors") +
                             " strictly increasing: " + (trend ? "yes" : "no"));
        break;
    }
    case Verdict::CollapsesToZero: {
        std::vector<CertifiedReal> xs;
        for (const auto& l : r.levels) {
            xs.push_back(detail::upper_envelope(spec.weight, l.level.d, delta, bits));
        }
        trend = detail::strictly_monotone(xs, false);
        r.evidence.push_back(std::string("upper envelopes strictly decreasing: ") + (trend ? "yes" : "no"));
        break;
    }
    }
    r.consistent = ordered && trend;
    return r;
}

/// Columns: level,d,p,q,lower_lo,lower_hi,upper_lo,upper_hi (outward-rounded decimals).
inline std::string to_csv(const NorthcottReport& r, int digits = 17) {
    std::ostringstream out;
    out << "level,d,p,q,lower_lo,lower_hi,upper_lo,upper_hi\n";
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        const auto& l = r.levels[i];
        out << (i + 1) << "," << l.level.d << "," << l.level.p << "," << l.level.q << ","
            << l.lower.lo().to_string(digits, MPFR_RNDD) << "," << l.lower.hi().to_string(digits, MPFR_RNDU) << ","
            << l.upper.lo().to_string(digits, MPFR_RNDD) << "," << l.upper.hi().to_string(digits, MPFR_RNDU) << "\n";
    }
    return out.str();
}

} // namespace radnor
