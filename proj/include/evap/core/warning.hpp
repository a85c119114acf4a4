// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace evap {

/// Machine-readable diagnostic attached to run reports.
struct Warning {
    std::string code;     ///< stable identifier, e.g. "clamped_threshold"
    std::string message;  ///< human-readable detail
};

using Warnings = std::vector<Warning>;

namespace warning_code {
inline constexpr const char* kClampedThreshold = "clamped_threshold";
inline constexpr const char* kPlanckPersistence = "planck_persistence";
inline constexpr const char* kMatterEntropyAdvisory = "matter_entropy_advisory";
inline constexpr const char* kNegativeCorrelation = "negative_correlation";
inline constexpr const char* kHypothesisFailure = "hypothesis_failure";
} // namespace warning_code

} // namespace evap
