#pragma once

#include <string>
#include <vector>

namespace becgate::verify {

/// One acceptance check: a measured value against a pinned requirement.
struct CheckResult {
    std::string id;
    std::string title;
    double measured;
    std::string unit;
    std::string requirement;  // human-readable bound
    bool pass;
};

struct Options {
    /// Test hook: compute the named check with a deliberately corrupted
    /// measurement (scaled by 1.25) so harness failures are detectable.
    std::string inject_fault;
};

/// Run the full acceptance matrix. Deterministic; the two grid-oracle rows
/// dominate the runtime (a few seconds).
std::vector<CheckResult> run_acceptance(const Options& opts = {});

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace becgate::verify
