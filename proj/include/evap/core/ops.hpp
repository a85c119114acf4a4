// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

#include "evap/core/density.hpp"
#include "evap/core/state.hpp"
#include "evap/core/unitary.hpp"

namespace evap {

/// Tensor product; labels are concatenated (a's first) and must stay
/// pairwise distinct.
MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Trace out every label not in `keep`.  Kept labels preserve their relative
/// order in the input.  Accepts a pure state or a density operator.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep);
DensityOperator partial_trace(const MultipartiteState& psi, const std::vector<std::string>& keep);

/// Reduced density operator of a pure state with the output labels in the
/// order given by `keep` (which may differ from the input order).
DensityOperator reduced_density(const MultipartiteState& psi, const std::vector<std::string>& keep);

/// Eigenvalues of the reduction of a pure state onto `keep`, descending.
/// Computed from the Gram matrix of the smaller side of the bipartition, so
/// the returned values equal the nonzero spectrum of the complementary
/// reduction as well; length is min(dim(keep), dim(complement)).
Eigen::VectorXd reduction_spectrum(const MultipartiteState& psi, const std::vector<std::string>& keep);

/// Purity tr[rho^2] of the reduction of a pure state onto `keep`, computed as
/// the squared Frobenius norm of the smaller-side Gram matrix (no eigensolve).
double reduction_purity(const MultipartiteState& psi, const std::vector<std::string>& keep);

/// Apply u to a contiguous run of labels (identity elsewhere).  The product
/// of the target dims must equal u.dim().
MultipartiteState apply_unitary(const MultipartiteState& psi, const std::vector<std::string>& targets,
                                const Unitary& u);

/// Reorder the tensor factors.  `order` must be a permutation of the label
/// names.
MultipartiteState permute_subsystems(const MultipartiteState& psi, const std::vector<std::string>& order);

/// Fuse a contiguous run of labels into one label (metadata only; the
/// composite index layout of adjacent factors already matches the fused one).
MultipartiteState merge_labels(const MultipartiteState& psi, const std::vector<std::string>& names,
                               const std::string& merged_name);

/// Split one label into two adjacent labels of dims (d_left, d_right) with
/// d_left * d_right equal to the original dim (metadata only).
MultipartiteState split_label(const MultipartiteState& psi, std::string_view name,
                              const Subsystem& left, const Subsystem& right);

/// Rename a label in place.
MultipartiteState rename_label(const MultipartiteState& psi, std::string_view name,
                               const std::string& new_name);

} // namespace evap
