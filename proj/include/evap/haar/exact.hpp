// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "evap/haar/purity.hpp"

namespace evap {

/**
 * @brief Exact-rational evaluation of average_purity for integral bit counts.
 *
 * Cross-validates the log-domain path; exponents are capped at 30 bits per
 * factor to keep the rationals small.
 */
boost::multiprecision::cpp_rational average_purity_exact(PurityTag tag, unsigned k, unsigned n,
                                                         unsigned log2_ext, unsigned r);

} // namespace evap
