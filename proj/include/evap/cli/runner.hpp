// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "evap/cli/config.hpp"
#include "evap/core/warning.hpp"

namespace evap {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kConfig = 1;
inline constexpr int kVerificationFailure = 2;
inline constexpr int kResourceCap = 3;
} // namespace exit_code

/// Result of one runner invocation.  Artifacts are byte-identical across
/// reruns with the same config and seed; anything nondeterministic (timing)
/// goes to stderr, never into the files.
struct RunOutcome {
    int exit = exit_code::kOk;
    Warnings warnings;
    std::vector<std::string> files;  ///< artifact paths written
};

/// Correlation curves: writes curves.csv and report.json into the out dir.
RunOutcome run_curves(const ScenarioConfig& config);

/// Decoupling verification sweep over r: writes verify.csv and report.json;
/// exit is kVerificationFailure when any radiated count fails LHS <= bound.
RunOutcome run_verify(const ScenarioConfig& config);

/// Threshold table plus deficit report: writes report.json.
RunOutcome run_thresholds(const ScenarioConfig& config);

/// Dispatch by subcommand name, mapping exceptions to process exit codes
/// (stderr carries the explanation).
int run_scenario(const std::string& command, const ScenarioConfig& config);

} // namespace evap
