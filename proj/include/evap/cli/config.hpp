// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evap/flow/correlation.hpp"
#include "evap/models/ext_spectrum.hpp"

namespace evap {

/// Invalid or inconsistent configuration; the message names the field.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ModelKind { Pure, Entangled, Uniform };

/**
 * @brief One scenario: which model, its bit counts and spectrum, evaluation
 *        path, sampling budget, and where artifacts go.
 *
 * The Monte Carlo path additionally requires integer bit counts and total
 * dimension within the sampling caps.
 */
struct ScenarioConfig {
    ModelKind model = ModelKind::Entangled;
    double k = 0.0;  ///< reference entanglement (bits)
    double n = 0.0;  ///< interior qubits
    ExtSpectrum ext = ExtSpectrum::trivial();
    CurvePath path = CurvePath::Analytic;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    double c = 1.0;  ///< confidence offset for thresholds (bits)
    std::vector<double> q_list{0.5, 1.0, 2.0};  ///< Renyi orders for the deficit report
    std::string out_dir = "out";
    std::optional<unsigned> workers;
};

/// Parse and validate a JSON config file; throws ConfigError naming the field.
ScenarioConfig load_config(const std::string& path);

/// Consistency checks shared by file loading and programmatic construction.
/// Throws ConfigError for semantic problems, std::length_error when the
/// Monte Carlo path would exceed the sampling caps.
void validate_config(const ScenarioConfig& config);

/// Command-line overrides applied on top of a loaded config.
struct CliOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<std::string> out_dir;
    std::optional<unsigned> workers;
    std::optional<std::string> path;  ///< "analytic" | "montecarlo"
};

ScenarioConfig apply_overrides(ScenarioConfig config, const CliOverrides& overrides);

} // namespace evap
