// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evap/haar/logreal.hpp"
#include "evap/models/ext_spectrum.hpp"

namespace evap {

/// Subsystem sets whose Haar-averaged purity has a closed form in the
/// entangled evaporation model.
enum class PurityTag { Ref, Ext, RefExt, R, B, RExt, BExt, RefR, RefB };

const std::vector<PurityTag>& all_purity_tags();
std::string to_string(PurityTag tag);
PurityTag purity_tag_from_string(const std::string& name);

/// The global state is pure, so some averaged purities coincide pairwise.
/// Returns the partner whose closed form is term-for-term identical.
std::optional<PurityTag> complement_pair(PurityTag tag);

/**
 * @brief Subsystem sizes in bits: reference k, exterior partner log2 N,
 *        radiated r and retained n - r interior qubits.
 *
 * Values are real-valued so that astrophysical scales (hundreds of bits)
 * are representable; the embedding constraint k + log2 N <= n is enforced.
 */
struct DimensionProfile {
    double log2_ref = 0.0;       ///< k
    double log2_ext = 0.0;       ///< log2 N
    double log2_radiated = 0.0;  ///< r
    double log2_retained = 0.0;  ///< n - r

    static DimensionProfile from_bits(double k, double n, double log2_ext, double r);
    double log2_interior() const { return log2_radiated + log2_retained; }
};

/**
 * @brief Closed-form Haar average of tr rho_set^2 over interior unitaries,
 *        for the reference/interior/exterior entangled model with a flat
 *        exterior spectrum.
 *
 * Exchanging the radiated and retained dimensions maps the R-rooted tags to
 * the B-rooted ones; exchanging reference and exterior dimensions maps
 * (R,ext) to (ref,R).  Degenerate one-dimensional factors reproduce the
 * exact endpoint values (e.g. an exhausted interior gives p = 1).
 */
LogReal average_purity(PurityTag tag, const DimensionProfile& dims);

/// First and second swap/identity coefficients of the twirl of a swap
/// operator acting on the A2 part of A = A1 (x) A2:
/// <U+ (x) U+ S_{A2;A2'} U (x) U> = alpha I + beta S_{A;A'}.
struct SchurCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
};
SchurCoefficients schur_average_swap(std::size_t dim_a1, std::size_t dim_a2);

/// The swap of the A2 factors of (A1 (x) A2) (x) (A1' (x) A2'), as a dense
/// matrix on the doubled space; the Monte Carlo oracle for the twirl above.
Eigen::MatrixXcd schur_swap_operator(std::size_t dim_a1, std::size_t dim_a2);

/// Entropy estimate from an averaged purity: -log2 p.  Jensen's inequality
/// makes this a lower-bound-style proxy for the averaged entropy.
double entropy_estimate(double mean_purity);
double entropy_estimate(const LogReal& mean_purity);

/// Trans-horizon information deficit at Renyi order q.
struct ChiProfile {
    double q = 1.0;
    double value = 0.0;  ///< bits, in [0, n - k]
};

/// chi^(q) = (n - k) - H^(q)(ext); rejects spectra outside [0, n - k].
ChiProfile chi(double q, double n, double k, const ExtSpectrum& ext);

} // namespace evap
