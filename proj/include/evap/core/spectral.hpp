// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "evap/core/density.hpp"

namespace evap {

/// Eigenvalues below this are treated as exact zeros when a spectrum enters
/// a logarithm or a fractional power.
inline constexpr double kEigenvalueFloor = 1e-14;

/**
 * @brief Renyi entropy of order q in bits: log2(tr rho^q) / (1 - q).
 *
 * q must be positive; q = 1 is evaluated as the von Neumann limit
 * -sum lambda log2 lambda.  Eigenvalues in [-tolerance, floor) are treated
 * as zero; anything below -tolerance is rejected as non-positive input.
 */
double renyi_entropy(const DensityOperator& rho, double q);

/// Same, from a known spectrum (entries must sum to 1 within 1e-8).
double renyi_entropy(const Eigen::VectorXd& spectrum, double q);

/// Trace norm: sum of singular values of a square complex matrix.
double trace_norm(const Eigen::MatrixXcd& a);

/// Trace norm of a Hermitian matrix via its eigenvalues (validated Hermitian
/// within 1e-10; cheaper than the SVD route and equal to it).
double hermitian_trace_norm(const Eigen::MatrixXcd& a);

/// Uhlmann fidelity F(rho, sigma) = trace-norm of sqrt(rho) sqrt(sigma).
double fidelity(const DensityOperator& rho, const DensityOperator& sigma);

/// tr rho^2.
double purity(const DensityOperator& rho);

/// Swap operator on H_d tensor H_d: S |i,j> = |j,i>.
Eigen::MatrixXcd swap_operator(std::size_t dim);

/// One entry of a per-subsystem-set entropy ledger.
struct EntropyEntry {
    std::string set;         ///< label set, e.g. "R" or "ref,B"
    double bits = 0.0;
    std::string provenance;  ///< "eigensolve", "complement:<set>", or "purity-estimate"
};
using EntropyLedger = std::vector<EntropyEntry>;

} // namespace evap
