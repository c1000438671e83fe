#pragma once

#include <string>
#include <vector>

#include "radnor/exactnum/certify.hpp"
#include "radnor/exactnum/primes.hpp"
#include "radnor/towers/tower_spec.hpp"

namespace radnor {

struct Constraint {
    std::string name;
    bool holds = false;
    bool required = true;
    std::string detail;
};

struct ConstraintReport {
    std::size_t level = 0; // 1-based
    std::vector<Constraint> constraints;

    bool all_required_hold() const {
        for (const auto& c : constraints) {
            if (c.required && !c.holds) {
                return false;
            }
        }
        return true;
    }

    const Constraint* find(std::string_view name) const {
        for (const auto& c : constraints) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

namespace detail {

/// max{d, 4 f(d)} for the as-printed case A gap.
inline CertifiedReal printed_gap_left(const WeightCase& w, const BigInt& d, mpfr_prec_t bits) {
    return max(CertifiedReal(d, bits), f_eval(w, d, bits) * 4L);
}

/// max{d, 4 exp(F(d))}.
inline CertifiedReal strong_gap_left(const WeightCase& w, const BigInt& d, mpfr_prec_t bits) {
    return max(CertifiedReal(d, bits), threshold(w, d, bits) * 4L);
}

inline bool printed_gap_holds(const WeightCase& w, const BigInt& d_prev, const BigInt& d, const PrecisionLadder& ladder) {
    return certified_less(
        [&](mpfr_prec_t bits) { return EnclosurePair(printed_gap_left(w, d_prev, bits), threshold(w, d, bits)); },
        ladder);
}

inline bool strong_gap_holds(const WeightCase& w, const BigInt& d_prev, const BigInt& d, const PrecisionLadder& ladder) {
    return certified_less(
        [&](mpfr_prec_t bits) { return EnclosurePair(strong_gap_left(w, d_prev, bits), threshold(w, d, bits)); },
        ladder);
}

inline bool positivity_holds(const WeightCase& w, const BigInt& d, const PrecisionLadder& ladder) {
    return certified_less(
        [&](mpfr_prec_t bits) { return EnclosurePair(positivity_lhs(w, d, bits), f_eval(w, d, bits)); }, ladder);
}

inline std::string approx(const CertifiedReal& x) { return x.to_string(10); }

} // namespace detail

/// Every inequality the tower construction imposes on level `index` (0-based), each decided
/// by certified comparison. For case A the printed gap 4f(d) is required and
/// the 4exp(f(d)) form is reported as advisory; for case B both coincide.
inline ConstraintReport check_level_constraints(const TowerSpec& spec, std::size_t index,
                                                const PrecisionLadder& ladder = {}) {
    if (index >= spec.levels.size()) {
        throw InvalidArgument("level " + std::to_string(index + 1) + " does not exist");
    }
    const WeightCase& w = spec.weight;
    const TowerLevel& l = spec.levels[index];
    const TowerLevel* prev = index > 0 ? &spec.levels[index - 1] : nullptr;
    ConstraintReport report;
    report.level = index + 1;
    auto add = [&](std::string name, bool holds, std::string detail, bool required = true) {
        report.constraints.push_back({std::move(name), holds, required, std::move(detail)});
    };
    auto show = [](const BigInt& n) { return n.get_str(); };

    add("d, p, q prime", is_prime(l.d) && is_prime(l.p) && is_prime(l.q),
        "d=" + show(l.d) + " p=" + show(l.p) + " q=" + show(l.q));
    add("p, q not in {2, 3}", l.p > 3 && l.q > 3, "coprime to the base data 2, 3^n");
    if (index == 0) {
        if (w.tag == CaseTag::C) {
            add("p_1 > 3", l.p > 3, show(l.p) + " > 3");
        } else {
            BigInt m = l.d < l.p ? l.d : l.p;
            add("min(d_1,p_1) > 3", m > 3, show(m) + " > 3");
        }
    }
    add("p < q", l.p < l.q, show(l.p) + " < " + show(l.q));
    add("q < 2p", l.q < 2 * l.p, show(l.q) + " < " + show(BigInt(2 * l.p)));

    if (w.tag == CaseTag::C) {
        add("d = p", l.d == l.p, show(l.d) + " = " + show(l.p));
        if (prev) {
            add("2p_{i-1} < p_i", 2 * prev->p < l.p, show(BigInt(2 * prev->p)) + " < " + show(l.p));
        }
    } else {
        if (is_case_b(w.tag)) {
            bool ok = detail::positivity_holds(w, l.d, ladder);
            add("d^gamma log(d)/(2(d-1)) < f(d)", ok,
                detail::approx(positivity_lhs(w, l.d, 64)) + " vs " + detail::approx(f_eval(w, l.d, 64)));
        }
        auto e = threshold(w, l.d, 64);
        std::string e_text = "exp(F)=" + detail::approx(e);
        bool low = certified_less_equal(
            [&](mpfr_prec_t bits) { return EnclosurePair(threshold(w, l.d, bits), CertifiedReal(l.p, bits)); },
            ladder);
        add("exp(F) <= p", low, e_text + " <= " + show(l.p));
        bool high = certified_less_equal(
            [&](mpfr_prec_t bits) {
                return EnclosurePair(CertifiedReal(BigInt(2 * l.p), bits), threshold(w, l.d, bits) * 4L);
            },
            ladder);
        add("2p <= 4exp(F)", high, show(BigInt(2 * l.p)) + " <= 4" + e_text);
        if (prev) {
            std::string pair = "d_{i-1}=" + show(prev->d) + ", d_i=" + show(l.d);
            bool strong = detail::strong_gap_holds(w, prev->d, l.d, ladder);
            if (w.tag == CaseTag::A) {
                bool printed = detail::printed_gap_holds(w, prev->d, l.d, ladder);
                add("gap max{d, 4f(d)} < exp(f(d')) [as printed]", printed, pair);
                add("gap max{d, 4exp(F)} < exp(F') [strengthened]", strong, pair, false);
            } else {
                add("gap max{d, 4exp(F)} < exp(F') [as printed]", strong, pair);
                add("gap max{d, 4exp(F)} < exp(F') [strengthened]", strong, pair);
            }
        }
    }
    if (prev) {
        add("d increasing", prev->d < l.d, show(prev->d) + " < " + show(l.d));
        add("p increasing", prev->p < l.p, show(prev->p) + " < " + show(l.p));
        add("q increasing", prev->q < l.q, show(prev->q) + " < " + show(l.q));
        add("p_i > q_{i-1}", prev->q < l.p, show(prev->q) + " < " + show(l.p), w.tag != CaseTag::A);
    }
    return report;
}

inline std::vector<ConstraintReport> check_tower(const TowerSpec& spec, const PrecisionLadder& ladder = {}) {
    std::vector<ConstraintReport> out;
    for (std::size_t i = 0; i < spec.levels.size(); ++i) {
        out.push_back(check_level_constraints(spec, i, ladder));
    }
    return out;
}

struct GenerateOptions {
    PrecisionLadder ladder;
    /// Refuse thresholds exp(F) beyond 2^max_bits.
    unsigned long max_bits = 4096;
    /// Largest d tried before giving up.
    unsigned long d_search_limit = 1UL << 20;
};

namespace detail {

inline BigInt next_prime_from(BigInt n) {
    if (n <= 2) {
        return BigInt(2);
    }
    while (!is_prime(n)) {
        ++n;
    }
    return n;
}

/// Smallest prime q with lower < q < 2p, or nullopt.
inline std::optional<BigInt> prime_below_double(const BigInt& lower, const BigInt& p) {
    for (BigInt k = lower + 1; k < 2 * p; ++k) {
        if (is_prime(k)) {
            return k;
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Greedy construction: smallest admissible d, then smallest p in
/// [exp(F), 2exp(F)], then smallest q in (p, 2p). A level whose windows come
/// out empty moves on to the next d.
inline TowerSpec generate_tower(const WeightCase& w, std::size_t level_count,
                                const std::optional<BigInt>& d1_hint = std::nullopt, const GenerateOptions& options = {}) {
    if (level_count == 0) {
        throw InvalidArgument("level count must be positive");
    }
    TowerSpec spec;
    spec.weight = w;
    BigInt start = d1_hint ? *d1_hint : BigInt(5);
    if (start < 5) {
        start = 5;
    }
    if (w.tag == CaseTag::C) {
        for (std::size_t i = 0; i < level_count; ++i) {
            BigInt p = detail::next_prime_from(i == 0 ? start : BigInt(2 * spec.levels.back().p + 1));
            auto q = detail::prime_below_double(p, p);
            if (!q) {
                throw GenerationStuck("no prime in (p, 2p) for p = " + p.get_str());
            }
            spec.levels.push_back({p, p, *q});
        }
        return spec;
    }
    CertifiedReal limit = log_interval(BigInt(2), 64) * static_cast<long>(options.max_bits);
    for (std::size_t i = 0; i < level_count; ++i) {
        const TowerLevel* prev = spec.levels.empty() ? nullptr : &spec.levels.back();
        BigInt d = detail::next_prime_from(prev ? BigInt(prev->d + 1) : start);
        for (;; d = detail::next_prime_from(d + 1)) {
            if (d > options.d_search_limit) {
                throw GenerationStuck("no admissible d up to " + std::to_string(options.d_search_limit) + " at level " +
                                      std::to_string(i + 1));
            }
            if (is_case_b(w.tag) && !detail::positivity_holds(w, d, options.ladder)) {
                continue;
            }
            if (prev) {
                bool gap = w.tag == CaseTag::A ? detail::printed_gap_holds(w, prev->d, d, options.ladder)
                                               : detail::strong_gap_holds(w, prev->d, d, options.ladder);
                if (!gap) {
                    continue;
                }
            }
            if (limit.certainly_less(threshold_exponent(w, d, 64))) {
                throw GenerationStuck("threshold exp(F(" + d.get_str() + ")) exceeds 2^" +
                                      std::to_string(options.max_bits) + " at level " + std::to_string(i + 1));
            }
            // A only needs p increasing; for B the gap already pushes p past q_{i-1}.
            BigInt exceeding = prev ? (w.tag == CaseTag::A ? prev->p : prev->q) : BigInt(3);
            if (exceeding < 3) {
                exceeding = 3;
            }
            BigInt p;
            try {
                p = next_prime_in(
                    [&](mpfr_prec_t bits) {
                        auto e = threshold(w, d, bits);
                        return EnclosurePair(e, e * 2L);
                    },
                    exceeding, options.ladder);
            } catch (const NoPrimeInRange&) {
                continue;
            }
            BigInt q_floor = prev && prev->q > p ? prev->q : p;
            auto q = detail::prime_below_double(q_floor, p);
            if (!q) {
                continue;
            }
            spec.levels.push_back({d, p, *q});
            break;
        }
    }
    return spec;
}

} // namespace radnor
