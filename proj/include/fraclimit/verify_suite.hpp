#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fraclimit::verify {

// The identity battery behind `fraclimit verify`: each check sweeps its grid,
// records the worst deviation, and compares against a frozen tolerance.

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    std::int64_t max_n = 10000; // cap on the N (or m) used by asymptotic checks
    std::string only;           // run a single named check; empty = all
};

const std::vector<std::string>& check_names();

// Runs the battery. Unknown `only` names throw ParameterError.
std::vector<CheckResult> run_checks(const VerifyOptions& options = {});

} // namespace fraclimit::verify
