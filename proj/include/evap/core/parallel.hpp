// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace evap {

/// Worker-count resolution, highest precedence first: explicit request,
/// EVAP_WORKERS environment variable, hardware concurrency.  Always >= 1.
unsigned resolve_workers(std::optional<unsigned> requested);

/**
 * @brief Run body(i) for i in [0, count) on up to `workers` threads.
 *
 * Work is handed out through an atomic counter; the caller must make the
 * result of iteration i independent of scheduling (e.g. write into slot i of
 * a preallocated buffer and reduce sequentially afterwards).  The first
 * exception thrown by any worker is rethrown after all threads join.
 */
void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& body);

} // namespace evap
