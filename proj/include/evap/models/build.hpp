// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evap/core/ops.hpp"
#include "evap/core/rng.hpp"
#include "evap/core/spectral.hpp"
#include "evap/core/state.hpp"
#include "evap/models/ext_spectrum.hpp"

namespace evap {

/**
 * @brief Hole maximally entangled with an external reference:
 *        (1/sqrt(K)) sum_i |i>_ref |i>_int with K = 2^k interior levels
 *        occupied out of 2^n.
 *
 * k = 0 gives a one-dimensional reference and a hole formed in a pure state.
 */
MultipartiteState build_pure_model_state(unsigned k, unsigned n);

/**
 * @brief Hole entangled with both a reference and a trans-horizon partner:
 *        (1/sqrt(K)) sum_i |i>_ref (sum_j sqrt(p_j) |ij>_int |j>_ext).
 *
 * The K*N occupied interior levels are embedded into the 2^n interior as
 * index i*N + j; requires K*N <= 2^n (rejected naming the deficit).  The ext
 * spectrum must be explicit or an integral uniform spectrum.
 */
MultipartiteState build_entangled_model_state(unsigned k, unsigned n, const ExtSpectrum& ext);

/**
 * @brief Interior uniformly entangled with an exterior partner only:
 *        (1/sqrt(E)) sum_j |j>_int |j>_ext with E = 2^log2_ent <= 2^n.
 */
MultipartiteState build_uniform_entangled_state(unsigned log2_ent, unsigned n);

/**
 * @brief One evaporation epoch: scramble the interior with u, then relabel
 *        the trailing `radiated` qubits as radiation.
 *
 * The interior label "int" (dim 2^n) becomes "B" (first n - r qubits) and
 * "R" (trailing r qubits); the split itself moves no amplitudes.  Label
 * order afterwards is (ref?, B, R, ext?).
 */
MultipartiteState evaporate(const MultipartiteState& psi, const Unitary& u, unsigned radiated);

/// Append `qubits` fresh interior qubits maximally entangled with an equal
/// number of fresh reference qubits (matter falling in after formation).
/// Both registers are fused into the existing "ref" / interior labels.
MultipartiteState add_entangled_matter(const MultipartiteState& psi, unsigned qubits);

struct MatterInjection {
    unsigned at_step = 0;  ///< injected before this step's scrambling
    unsigned qubits = 0;
};

struct CascadeOptions {
    bool keep_states = false;                       ///< retain the state after each step
    std::optional<MatterInjection> injection;       ///< optional infalling matter
};

struct CascadeStep {
    unsigned step = 0;       ///< 1-based epoch index
    unsigned radiated = 0;   ///< accumulated radiated qubits
    EntropyLedger entropies; ///< exact per-subsystem entropies (von Neumann)
};

struct CascadeResult {
    std::vector<CascadeStep> steps;
    std::vector<MultipartiteState> states;  ///< filled when keep_states is set
    MultipartiteState final_state;
};

/**
 * @brief Repeated one-qubit evaporation: before each peel, a fresh Haar
 *        unitary scrambles the remaining interior.
 *
 * Radiated qubits accumulate in "R"; the remaining interior ends as "B".
 * By default only per-step entropy summaries are kept; full states are
 * retained on request.
 */
CascadeResult cascade_evaporate(const MultipartiteState& psi, unsigned steps, RandomStream& stream,
                                const CascadeOptions& options = {});

} // namespace evap
