#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace groverian {

struct VerifyOptions {
    int samples = 1000;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    long cases = 0;
    double worst = 0.0;   // largest deviation / violation seen
    std::string detail;
    nlohmann::json failing_case; // serialized replay data for the first failure
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

// Runs the whole property suite: operator involutions, trace-vs-analytic
// agreement, state-core round trips, upper-bound dominance, product-state
// exactness, relabeling and local-unitary invariance, ascent monotonicity,
// GHZ/W oracle values, entropy cross-routes, tangle range/symmetry, kernel
// reference equivalence and the operational-success bridge.
VerifyReport run_verify(const VerifyOptions& opts);

nlohmann::json verify_report_json(const VerifyReport& r);

} // namespace groverian
