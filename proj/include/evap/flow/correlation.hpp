// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "evap/core/density.hpp"
#include "evap/core/rng.hpp"
#include "evap/core/warning.hpp"
#include "evap/haar/purity.hpp"
#include "evap/models/ext_spectrum.hpp"

namespace evap {

/// Total correlation between two sets from their entropies:
/// C(X:Y) = (S(X) + S(Y) - S(X,Y)) / 2.  May come out slightly negative
/// through approximation error; callers flag, never silently clamp.
double correlation(double s_x, double s_y, double s_xy);

/// Deviation of a state from maximal entropy: log2(dim) - S(rho), the
/// number of bits an observer holding the subsystem could already discern.
double discernable_information(const DensityOperator& rho);

enum class CurvePath { Analytic, MonteCarlo };

struct CurveConfig {
    double k = 0.0;                        ///< reference entanglement bits
    double n = 0.0;                        ///< interior qubits
    ExtSpectrum ext = ExtSpectrum::trivial();
    CurvePath path = CurvePath::Analytic;
    std::size_t samples = 1000;            ///< Monte Carlo path only
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

/// One radiated-qubit count along the evaporation.
struct CurvePoint {
    unsigned r = 0;
    double c_ref_b = 0.0;      ///< C(ref : B)
    double c_ref_rext = 0.0;   ///< C(ref : R,ext)
    double c_ref_bext = 0.0;   ///< C(ref : B,ext)
    double c_ref_r = 0.0;      ///< C(ref : R)
    double residual_ab = 0.0;  ///< C(ref:B) + C(ref:R,ext) - S(ref)
    double residual_cd = 0.0;  ///< C(ref:B,ext) + C(ref:R) - S(ref)
};

struct CurveResult {
    std::vector<CurvePoint> points;
    Warnings warnings;
};

/**
 * @brief The four reference-correlation curves over r = 0..n.
 *
 * The analytic path estimates entropies as -log2 of closed-form averaged
 * purities (always taking the purity of the smaller side of each pure-state
 * bipartition); the Monte Carlo path averages exact eigensolve entropies
 * over Haar draws.  Monogamy makes each complementary pair sum to S(ref);
 * the residual columns record the numerical remainder of that identity.
 */
CurveResult correlation_curves(const CurveConfig& config);

/// Monte Carlo dimension caps: sampled pure states and dense density-matrix
/// factors beyond these sizes are refused (callers suggest the analytic path).
inline constexpr std::size_t kStateDimCap = std::size_t{1} << 12;
inline constexpr std::size_t kDensityDimCap = std::size_t{1} << 10;

/// Mean information content of the radiation, r = 0..n, for a hole formed
/// in a pure state (no reference entanglement): the information pulse that
/// stays near zero until half-evaporation and then rises ~2 bits per qubit.
struct PulsePoint {
    unsigned r = 0;
    double mean_bits = 0.0;
    double std_error = 0.0;
};
std::vector<PulsePoint> radiation_information_pulse(unsigned n, std::size_t samples,
                                                    std::uint64_t seed, unsigned workers);

/// Monte Carlo mean of C(ext : R) over Haar draws for the uniformly
/// entangled model, r = 0..n.
std::vector<double> ext_radiation_correlation(unsigned log2_ent, unsigned n, std::size_t samples,
                                              std::uint64_t seed, unsigned workers);

} // namespace evap
