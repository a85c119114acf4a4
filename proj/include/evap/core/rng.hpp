// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>

namespace evap {

/**
 * @brief Seeded random stream with cheap, collision-resistant substream
 *        derivation.
 *
 * Substreams are derived by hashing (seed, index), so a parallel sampler can
 * hand substream(i) to the worker that processes sample i and the draw is
 * identical no matter which thread runs it or in which order.  Gaussian
 * variates are produced by an explicit Box-Muller transform instead of
 * std::normal_distribution, whose output sequence is implementation-defined.
 */
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    /// Derive an independent stream for the given sample index.
    RandomStream substream(std::uint64_t index) const;

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();

    /// Standard normal variate (Box-Muller, spare value cached).
    double normal();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// SplitMix64 finalizer used for seed mixing.
std::uint64_t splitmix64(std::uint64_t x);

} // namespace evap
