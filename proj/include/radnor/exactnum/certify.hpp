#pragma once

#include <functional>
#include <utility>

#include "radnor/exactnum/certified_real.hpp"

namespace radnor {

/// Precision schedule for certified decisions: start, then double until the cap.
struct PrecisionLadder {
    mpfr_prec_t initial = 64;
    mpfr_prec_t cap = 4096;
};

using EnclosurePair = std::pair<CertifiedReal, CertifiedReal>;
using RefinePair = std::function<EnclosurePair(mpfr_prec_t)>;

/// Decides a < b by interval separation, re-evaluating both sides through
/// `refine` at doubled precision until they separate. Throws UndecidableAtCap
/// when they still overlap at the cap (typically an exact tie).
inline bool certified_less(CertifiedReal a, CertifiedReal b, const RefinePair& refine,
                           const PrecisionLadder& ladder = {}) {
    mpfr_prec_t bits = std::max(ladder.initial, std::max(a.bits(), b.bits()));
    for (;;) {
        if (a.certainly_less(b)) {
            return true;
        }
        if (b.certainly_less_equal(a)) {
            return false;
        }
        bits *= 2;
        if (bits > ladder.cap) {
            throw UndecidableAtCap("certified comparison undecided at " + std::to_string(ladder.cap) +
                                   " bits: " + a.to_string() + " vs " + b.to_string());
        }
        std::tie(a, b) = refine(bits);
    }
}

/// Same decision, with both sides produced by `evaluate(bits)` from the start.
template <class Evaluate>
bool certified_less(Evaluate&& evaluate, const PrecisionLadder& ladder = {}) {
    auto [a, b] = evaluate(ladder.initial);
    return certified_less(std::move(a), std::move(b), RefinePair(std::forward<Evaluate>(evaluate)), ladder);
}

/// a <= b, decided the same way.
template <class Evaluate>
bool certified_less_equal(Evaluate&& evaluate, const PrecisionLadder& ladder = {}) {
    // a <= b  <=>  not (b < a)
    auto swapped = [&](mpfr_prec_t bits) {
        auto [a, b] = evaluate(bits);
        return EnclosurePair(std::move(b), std::move(a));
    };
    return !certified_less(swapped, ladder);
}

} // namespace radnor
