#pragma once

#include <string>
#include <vector>

namespace pwords::checks {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs one of {tables, words, graphs, gray, analysis, all}; sizes are
/// bounded by max_n and by a vertex-count guard. Unknown suite names raise
/// ContractError.
std::vector<CheckResult> run_suite(const std::string &suite, int max_n, int threads);

} // namespace pwords::checks
