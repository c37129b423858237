#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lockcalc/report.hpp"

namespace lockcalc {

/// One reproduced figure: what was measured, what it is held against, and
/// whether it lands inside the stated tolerance.
struct CheckResult {
    std::string id;
    std::string description;
    std::string measured;
    std::string expected;
    bool pass = false;
};

struct PaperCheckOptions {
    std::uint64_t seed = 20200612;
    std::int64_t mc_samples = 100000;
};

/// Replays the published arithmetic chain and the property suites.
std::vector<CheckResult> run_paper_check(const PaperCheckOptions& options = {});

Table paper_check_table(const std::vector<CheckResult>& results);

}  // namespace lockcalc
