// Builds a three-level case A tower with c = 1/20, checks it and prints the
// per-level height bounds at delta = 0 together with the sandwich estimate.

#include <iostream>

#include "radnor/northcott/sandwich.hpp"
#include "radnor/towers/classify.hpp"
#include "radnor/towers/constraints.hpp"

using namespace radnor;

int main() {
    auto w = WeightCase::make(CaseTag::A, Rational(1, 20));
    auto spec = generate_tower(w, 3);
    std::cout << serialize(spec) << "\n";

    for (const auto& r : check_tower(spec)) {
        std::cout << "level " << r.level << ": " << (r.all_required_hold() ? "all required constraints hold" : "FAILED")
                  << "\n";
    }

    auto report = northcott_sandwich(spec, Rational(0));
    std::cout << "\n" << to_csv(report, 12);
    std::cout << "estimate: " << report.estimate.to_string(12) << "\n";
    std::cout << "verdict: " << report.verdict_string() << "\n";

    auto cls = classify_intervals(w);
    std::cout << "I_B=" << cls.bogomolov.to_string() << ", I_N=" << cls.northcott.to_string()
              << ", Nor_0=" << cls.nor.to_string() << "\n";
    return report.consistent ? 0 : 1;
}
