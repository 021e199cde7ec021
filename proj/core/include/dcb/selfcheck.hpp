#pragma once

#include "dcb/config.hpp"

#include <string>
#include <vector>

namespace dcb {

struct CheckResult {
    std::string name;
    bool passed = false;
    double measured = 0.0;   // worst observed deviation / violation count
    double tolerance = 0.0;
    std::string detail;
};

// Fast self-validation: ledger conservation fuzz, Erlang closed form vs
// recursion, path-loss golden values. Configuration itself must already have
// passed Config::validate().
std::vector<CheckResult> run_selfcheck(const Config& cfg);

} // namespace dcb
