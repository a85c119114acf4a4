// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "evap/core/subsystem.hpp"

namespace evap {

/**
 * @brief Immutable pure state over an ordered list of named subsystems.
 *
 * Amplitudes are stored in row-major composite order: the first label is the
 * most significant digit of the composite index.  The squared norm must be 1
 * within kNormTolerance at construction.
 */
class MultipartiteState {
public:
    static constexpr double kNormTolerance = 1e-12;

    MultipartiteState(std::vector<Subsystem> labels, Eigen::VectorXcd amplitudes);

    const std::vector<Subsystem>& labels() const { return labels_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }

    std::size_t label_index(std::string_view name) const { return find_label(labels_, name); }
    bool has(std::string_view name) const { return has_label(labels_, name); }
    std::size_t label_dim(std::string_view name) const { return labels_[label_index(name)].dim; }

private:
    std::vector<Subsystem> labels_;
    Eigen::VectorXcd amps_;
};

} // namespace evap
