#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "picard/fuchsian.hpp"
#include "picard/orbit.hpp"

namespace picard {

struct SuiteResult {
    std::string name;
    long cases = 0;
    bool passed = true;
    std::string detail;  // first failure, empty when passed
};

/// Run the invariant suites of every module with the given seed. When
/// inject_failure is set, a deliberately broken suite is appended (used to
/// prove the harness reports failures).
std::vector<SuiteResult> run_selfcheck(std::uint64_t seed, bool inject_failure = false);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace picard
