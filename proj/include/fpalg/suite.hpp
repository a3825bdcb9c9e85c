#pragma once

#include "fpalg/repmat.hpp"

#include <string>
#include <vector>

namespace fpalg {

struct SuiteCheck {
    std::string label;
    bool pass;
    std::string detail; // rendering of the offending value, empty on pass
};

struct CriterionResult {
    int id;
    std::string title;
    std::vector<SuiteCheck> checks;
    bool pass;
};

/// The sl2 rules with the sign of one right-hand side flipped, used as the
/// canonical non-confluent control: the single critical pair fails to resolve.
RewriteSystem sabotaged_sl2_system();

/// Runs the twelve-part verification suite covering confluence certificates,
/// every built-in homomorphism and diagram, the skew-product and matrix
/// oracles, basis counts, involutions, and the negative controls. All checks
/// are exact; randomized parts use fixed seeds.
std::vector<CriterionResult> run_acceptance_suite();

} // namespace fpalg
