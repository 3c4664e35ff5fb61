#pragma once

#include <string>
#include <vector>

namespace f2mzv::checks {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The numbered acceptance criteria; tolerances are pinned in the
// implementations.
CheckResult depth1_numeric_values();     // 1
CheckResult explicit_formula_identity(); // 2
CheckResult oracle_cross_checks();       // 3
CheckResult shuffle_algebra_properties();// 4
CheckResult hopf_model();                // 5
CheckResult main1_dimensions();          // 6
CheckResult coaction_recursion();        // 7
CheckResult main2_machinery();           // 8
CheckResult coefficient_spot_values();   // 9

std::vector<CheckResult> run_all();

/// Depth-one invariant suite for the CLI `check depth1 --max K` runner.
std::vector<CheckResult> run_depth1(int max_k);

} // namespace f2mzv::checks
