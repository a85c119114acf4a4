// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>

#include "evap/core/rng.hpp"

namespace evap {

/**
 * @brief Unitary matrix; construction validates U^dag U = I within
 *        kTolerance in Frobenius norm.
 */
class Unitary {
public:
    static constexpr double kTolerance = 1e-10;

    explicit Unitary(Eigen::MatrixXcd matrix);

    const Eigen::MatrixXcd& matrix() const { return mat_; }
    std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }

private:
    Eigen::MatrixXcd mat_;
};

/**
 * @brief Draw a Haar-distributed unitary of the given dimension.
 *
 * A complex Ginibre matrix is QR-factorized and the phases of R's diagonal
 * are absorbed into Q, which makes the distribution exactly left- and
 * right-invariant rather than QR-convention dependent.  dim = 1 yields a
 * uniformly random phase factor.
 */
Unitary haar_sample(std::size_t dim, RandomStream& stream);

} // namespace evap
