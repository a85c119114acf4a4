// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/flow/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evap {

namespace {

constexpr double kTol = 1e-9;

ThresholdEntry clamped_entry(std::string name, double raw, double n, Warnings& warnings) {
    ThresholdEntry entry;
    entry.name = std::move(name);
    entry.raw = raw;
    entry.qubits = std::clamp(raw, 0.0, n);
    entry.clamped = std::abs(entry.qubits - raw) > kTol;
    if (entry.clamped) {
        std::ostringstream msg;
        msg << entry.name << " clamped from " << raw << " to " << entry.qubits;
        warnings.push_back(Warning{warning_code::kClampedThreshold, msg.str()});
    }
    return entry;
}

void validate(const ThresholdParams& p) {
    if (!(p.n >= 0.0)) throw std::invalid_argument("thresholds: n must be nonnegative");
    if (p.k < -kTol || p.k > p.n + kTol) {
        throw std::invalid_argument("thresholds: k must lie in [0, n]");
    }
    if (!(p.c >= 0.0)) throw std::invalid_argument("thresholds: c must be nonnegative");
    const double deficit_max = p.n - p.k;
    if (p.chi_half < -kTol || p.chi_two < -kTol) {
        throw std::invalid_argument("thresholds: chi values must be nonnegative");
    }
    if (p.chi_half > deficit_max + kTol || p.chi_two > deficit_max + kTol) {
        throw std::invalid_argument("thresholds: chi values cannot exceed n - k");
    }
}

} // namespace

ThresholdReport thresholds(const ThresholdParams& p) {
    validate(p);
    ThresholdReport report;
    report.pure_retention =
        clamped_entry("pure_retention", (p.n - p.k) / 2.0 - p.c, p.n, report.warnings);
    report.pure_release_further =
        clamped_entry("pure_release_further", p.k + 2.0 * p.c, p.n, report.warnings);
    report.entangled_window_count = clamped_entry(
        "entangled_window_count", p.k + p.chi_two / 2.0 + p.c, p.n, report.warnings);
    report.entangled_early_retention = clamped_entry(
        "entangled_early_retention", p.chi_half / 2.0 - p.c, p.n, report.warnings);
    report.ext_transfer =
        clamped_entry("ext_transfer", p.n - p.chi_half / 2.0 + p.c, p.n, report.warnings);

    const double width_raw = p.k + (p.chi_half - p.chi_two) / 2.0 + 2.0 * p.c;
    report.window_width = std::clamp(width_raw, 0.0, p.n);
    if (std::abs(report.window_width - width_raw) > kTol) {
        std::ostringstream msg;
        msg << "window_width clamped from " << width_raw << " to " << report.window_width;
        report.warnings.push_back(Warning{warning_code::kClampedThreshold, msg.str()});
    }

    if (report.ext_transfer.raw > p.n + kTol) {
        std::ostringstream msg;
        msg << "entanglement transfer would complete only after " << report.ext_transfer.raw
            << " of " << p.n << " qubits: the trans-horizon entanglement persists to the last "
            << "radiated qubit";
        report.warnings.push_back(Warning{warning_code::kPlanckPersistence, msg.str()});
    }
    return report;
}

} // namespace evap
