// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string_view>
#include <vector>

#include "evap/core/subsystem.hpp"

namespace evap {

/**
 * @brief Immutable density operator over an ordered list of named subsystems.
 *
 * Construction validates hermiticity and unit trace within kTolerance.
 * Positivity is enforced where a spectrum is actually consumed: eigenvalues
 * below -kTolerance are rejected there, small negatives are clamped to zero.
 */
class DensityOperator {
public:
    static constexpr double kTolerance = 1e-10;

    DensityOperator(std::vector<Subsystem> labels, Eigen::MatrixXcd matrix);

    const std::vector<Subsystem>& labels() const { return labels_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }

    std::size_t label_index(std::string_view name) const { return find_label(labels_, name); }
    bool has(std::string_view name) const { return has_label(labels_, name); }

private:
    std::vector<Subsystem> labels_;
    Eigen::MatrixXcd mat_;
};

} // namespace evap
