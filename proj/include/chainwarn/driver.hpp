#pragma once

#include <string>

#include <json.hpp>

namespace chainwarn {

/// Exit codes of the batch driver.
enum ExitCode : int {
    kExitPass = 0,
    kExitBoundViolated = 1,
    kExitBadKind = 2,
    kExitBadParams = 3,
    kExitBudget = 4,
};

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;
};

/// Dispatches one experiment config {kind: ..., ...} to the library and
/// returns the machine-readable report. Identical configs (and seed)
/// produce byte-identical payloads; only timing_ms varies.
RunResult run_config(const nlohmann::json& config, int workers = 1);

}  // namespace chainwarn
