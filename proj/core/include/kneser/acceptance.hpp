#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace kneser {

// One acceptance criterion outcome. Time limits are pinned next to each
// criterion body; a criterion fails when its check fails or its pinned
// limit is exceeded.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double limit_seconds = 0.0; // 0 means no pinned limit
};

struct AcceptanceOptions {
    std::uint64_t seed = 7;
};

// Runs the twelve acceptance criteria in order. Results are deterministic
// for a fixed seed, apart from the measured timings.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

// Prints one PASS/FAIL line per criterion plus a summary line; returns
// whether every criterion passed.
bool print_acceptance(std::ostream& out, const AcceptanceOptions& opt = {});

} // namespace kneser
