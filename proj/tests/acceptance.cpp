// Acceptance gate: runs every criterion of the verification suite and
// prints one pass/fail line per criterion. Exits nonzero if any fails.

#include "fpalg/report.hpp"
#include "fpalg/suite.hpp"

#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    bool structured = argc > 1 && std::strcmp(argv[1], "--format=structured") == 0;
    std::vector<fpalg::CriterionResult> results = fpalg::run_acceptance_suite();
    bool pass = true;
    for (const auto& r : results) pass = pass && r.pass;
    if (structured)
        std::cout << fpalg::render_json(results).dump(2) << "\n";
    else
        std::cout << fpalg::render_text(results);
    return pass ? 0 : 1;
}
