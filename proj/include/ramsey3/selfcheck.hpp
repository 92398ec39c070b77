#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey3 {

struct SelfcheckOptions {
    bool quick = false;      // sample 2^14 six-vertex instances instead of all 2^20
    std::uint64_t seed = 1;  // for every sampled suite
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Desk-scale exhaustive suites: six-vertex purification, five-vertex F
/// hitting sets, detector/oracle agreement, path forcing in graphs and the
/// pigeonhole arithmetic up to n = 10^6.
std::vector<CheckResult> run_selfcheck(const SelfcheckOptions& opts);

}  // namespace ramsey3
