// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evap/core/density.hpp"
#include "evap/core/rng.hpp"
#include "evap/core/state.hpp"

namespace evap {

/// Role assignment for the decoupling inequality: a unitary scrambles
/// Y = Y1 (x) Y2, Y1 is discarded, and the question is how close the
/// surviving (X, Y2, Z) state is to having X decoupled from (Y2, Z).
struct DecouplingPartition {
    std::vector<std::string> x;
    std::vector<std::string> y1;
    std::vector<std::string> y2;
    std::vector<std::string> z;  ///< may be empty (one-dimensional bystander)
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;
};

/**
 * @brief Monte Carlo estimate of the decoupling distance
 *        E_U || sigma_{X,Y2,Z} - sigma_X (x) sigma_{Y2,Z} ||_1
 *        with sigma = tr_{Y1} [ U_Y psi U_Y^dag ].
 *
 * Sample i draws its unitary from stream.substream(i), so the estimate is
 * byte-identical for any worker count.
 */
Estimate decoupling_lhs(const MultipartiteState& psi, const DecouplingPartition& roles,
                        std::size_t samples, const RandomStream& stream, unsigned workers = 1);

/// Reduced inputs of the closed-form bounds, all in canonical (X, Y, Z)
/// label order.
struct DecouplingInputs {
    DensityOperator rho_x;
    DensityOperator rho_z;
    DensityOperator rho_xz;
    DensityOperator rho_yz;
    DensityOperator rho_xyz;
    double dim_y1 = 1.0;
    double dim_y2 = 1.0;
};

DecouplingInputs decoupling_inputs(const MultipartiteState& psi, const DecouplingPartition& roles);

/**
 * @brief Bound level: each later level assumes more and is weaker (larger).
 *
 * Full:         general smoothed bound, any 0 <= 2nu, 2mu <= 1.
 * Product:      assumes rho_XZ = rho_X (x) rho_Z (trace distance <= 1e-8);
 *               drops the first bracket, which vanishes under the hypothesis.
 * PureRenyiHalf: additionally assumes rho_XYZ pure and 2nu = 2mu = 1/2;
 *               collapses to 2 (Y2/Y1) 2^(H_X + H_Z) with H = Renyi-1/2.
 */
enum class BoundLevel { Full, Product, PureRenyiHalf };

/// Hypothesis tolerances for the conditional bound levels.
inline constexpr double kProductTolerance = 1e-8;   ///< trace distance
inline constexpr double kPurityTolerance = 1e-8;    ///< 1 - tr rho^2

/**
 * @brief Closed-form bound on the squared decoupling distance.
 *
 * Violated hypotheses raise std::domain_error naming the failed hypothesis;
 * no bound is quoted in that case.
 */
double decoupling_rhs(const DecouplingInputs& inputs, double two_nu, double two_mu,
                      BoundLevel level);

/**
 * @brief Special case bounding the averaged trace norm itself (not its
 *        square): with rho_{X,Y} pure and exponent 1/2, the distance is at
 *        most sqrt(2 (Y2/Y1) 2^(H_X)), H at Renyi order 1/2.
 */
double ext_decoupling_bound(double h_bits, double dim_y1, double dim_y2);

/// Same bound in the log2 domain for astrophysical dimensions.
double ext_decoupling_bound_log2(double h_bits, double log2_y1, double log2_y2);

/// Fidelity floor implied by a bound b on the squared distance, in the
/// sqrt(b/2) normalization the special case above produces: 1 - sqrt(b/2).
double fidelity_floor_from_bound(double squared_bound);

/// Fidelity floor from an actual trace-norm distance t: 1 - t/2.
double fidelity_floor_from_trace_norm(double trace_norm_distance);

} // namespace evap
