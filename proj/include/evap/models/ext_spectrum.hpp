// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace evap {

/**
 * @brief Spectrum of the trans-horizon partner system ("ext").
 *
 * Either an explicit probability list, or a symbolically uniform spectrum
 * over 2^log2_count levels.  The symbolic form exists because analytic work
 * routinely needs flat spectra over dimensions like 2^90 that no explicit
 * list can hold; entropies of the symbolic form are exact (log2_count bits
 * at every Renyi order).
 */
class ExtSpectrum {
public:
    /// Explicit probabilities; entries must be >= 0 and sum to 1 within 1e-12.
    static ExtSpectrum explicit_probs(std::vector<double> probabilities);

    /// Flat spectrum over 2^log2_count levels (log2_count >= 0, possibly
    /// non-integral for purely analytic use).
    static ExtSpectrum uniform(double log2_count);

    /// Spectrum of a one-dimensional (absent) partner system.
    static ExtSpectrum trivial() { return uniform(0.0); }

    bool is_uniform() const { return uniform_; }

    /// log2 of the number of levels.
    double log2_count() const;

    /// Number of levels as an integer; rejects symbolic spectra whose
    /// log2_count is not a small integer.
    std::size_t count() const;

    /// Explicit probabilities (materializes small uniform spectra on demand).
    std::vector<double> probabilities() const;

    /// Renyi entropy of the spectrum in bits, q > 0 (q = 1: von Neumann).
    double renyi_bits(double q) const;

private:
    ExtSpectrum() = default;
    bool uniform_ = false;
    double log2_count_ = 0.0;
    std::vector<double> probs_;
};

} // namespace evap
