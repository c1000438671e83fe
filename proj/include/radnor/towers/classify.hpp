#pragma once

#include <string>

#include "radnor/towers/weight_case.hpp"

namespace radnor {

/// A right-unbounded interval (endpoint, inf) or [endpoint, inf).
struct IntervalDescriptor {
    Rational endpoint;
    bool closed = false;

    bool contains(const Rational& x) const { return closed ? x >= endpoint : x > endpoint; }

    /// this is a subset of other
    bool subset_of(const IntervalDescriptor& other) const {
        if (endpoint != other.endpoint) {
            return endpoint > other.endpoint;
        }
        return !closed || other.closed;
    }

    const Rational& infimum() const { return endpoint; }

    std::string to_string() const { return (closed ? "[" : "(") + radnor::to_string(endpoint) + ",inf)"; }

    friend bool operator==(const IntervalDescriptor&, const IntervalDescriptor&) = default;
};

/// Nor_gamma at the interval endpoint: zero, a finite positive value, or infinity.
struct NorthcottNumber {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Zero;
    Rational value;

    static NorthcottNumber zero() { return {Kind::Zero, Rational(0)}; }
    static NorthcottNumber finite(Rational v) { return {Kind::Finite, std::move(v)}; }
    static NorthcottNumber infinite() { return {Kind::Infinite, Rational(0)}; }

    std::string to_string() const {
        switch (kind) {
        case Kind::Zero: return "0";
        case Kind::Finite: return radnor::to_string(value);
        case Kind::Infinite: return "inf";
        }
        return "?";
    }

    friend bool operator==(const NorthcottNumber&, const NorthcottNumber&) = default;
};

struct Classification {
    int conclusion = 0; // which of the three interval shapes holds
    Rational gamma;     // weight at the interval endpoint
    IntervalDescriptor bogomolov;
    IntervalDescriptor northcott;
    NorthcottNumber nor;
    IntervalDescriptor base_northcott{Rational(1), false};
};

/// The interval shape the construction produces for each case.
inline Classification classify_intervals(const WeightCase& w) {
    Classification out;
    out.gamma = w.gamma;
    switch (w.tag) {
    case CaseTag::A:
    case CaseTag::B2:
        out.conclusion = 2;
        out.bogomolov = {w.gamma, true};
        out.northcott = {w.gamma, false};
        out.nor = NorthcottNumber::finite(*w.c);
        break;
    case CaseTag::B1:
        out.conclusion = 1;
        out.bogomolov = {w.gamma, false};
        out.northcott = {w.gamma, false};
        out.nor = NorthcottNumber::zero();
        break;
    case CaseTag::B3:
    case CaseTag::C:
        out.conclusion = 3;
        out.bogomolov = {w.gamma, true};
        out.northcott = {w.gamma, true};
        out.nor = NorthcottNumber::infinite();
        break;
    }
    return out;
}

} // namespace radnor
