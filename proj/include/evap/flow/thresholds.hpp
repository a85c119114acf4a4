// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "evap/core/warning.hpp"

namespace evap {

/**
 * @brief Inputs of the qubit-count thresholds: interior size n, reference
 *        entanglement k, trans-horizon information deficits at Renyi orders
 *        1/2 and 2, and a confidence offset c (bits).
 *
 * Deficits coming from an actual spectrum satisfy chi_half <= chi_two (Renyi
 * entropies are non-increasing in the order, so the deficit is non-decreasing
 * in it), but the pair is taken as given here: the threshold formulas are
 * well defined for any nonnegative deficits within [0, n - k].
 */
struct ThresholdParams {
    double k = 0.0;
    double n = 0.0;
    double chi_half = 0.0;
    double chi_two = 0.0;
    double c = 0.0;
};

struct ThresholdEntry {
    std::string name;
    double qubits = 0.0;  ///< clamped to [0, n]
    double raw = 0.0;     ///< unclamped value
    bool clamped = false;
};

/**
 * @brief The five qubit-count thresholds of the evaporation timeline.
 *
 * pure_retention:            r up to which an unentangled-exterior hole
 *                            still hides the reference information,
 *                            (n - k)/2 - c.
 * pure_release_further:      additional qubits after which that information
 *                            is out, k + 2c.
 * entangled_window_count:    qubits in the initial (and by symmetry final)
 *                            window in which information leaks early,
 *                            k + chi_two/2 + c.
 * entangled_early_retention: r below which even the early leak has not
 *                            started, chi_half/2 - c.
 * ext_transfer:              r at which trans-horizon entanglement has moved
 *                            to the radiation, n - chi_half/2 + c.
 */
struct ThresholdReport {
    ThresholdEntry pure_retention;
    ThresholdEntry pure_release_further;
    ThresholdEntry entangled_window_count;
    ThresholdEntry entangled_early_retention;
    ThresholdEntry ext_transfer;
    double window_width = 0.0;  ///< k + (chi_half - chi_two)/2 + 2c, clamped
    Warnings warnings;
};

ThresholdReport thresholds(const ThresholdParams& params);

} // namespace evap
