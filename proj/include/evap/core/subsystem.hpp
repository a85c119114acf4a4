// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evap {

/**
 * @brief Named tensor factor of a multipartite system.
 *
 * Conventional names used throughout: "ref" (external reference), "int"
 * (hole interior before any split), "B" (retained interior), "R" (radiated
 * qubits), "ext" (trans-horizon partner system).  One-dimensional factors are
 * legal and keep bookkeeping uniform at the endpoints of an evaporation.
 */
struct Subsystem {
    std::string name;
    std::size_t dim = 1;
};

/// Product of factor dimensions.
std::size_t total_dimension(const std::vector<Subsystem>& labels);

/// Index of the label with the given name; throws std::invalid_argument
/// listing the known labels when absent.
std::size_t find_label(const std::vector<Subsystem>& labels, std::string_view name);

/// True when a label with the given name is present.
bool has_label(const std::vector<Subsystem>& labels, std::string_view name);

/// Validates dims >= 1 and pairwise-distinct names; throws naming the
/// offending label otherwise.
void validate_labels(const std::vector<Subsystem>& labels);

} // namespace evap
