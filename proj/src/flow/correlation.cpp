// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/flow/correlation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "evap/core/ops.hpp"
#include "evap/core/parallel.hpp"
#include "evap/core/spectral.hpp"
#include "evap/core/unitary.hpp"
#include "evap/models/build.hpp"

namespace evap {

double correlation(double s_x, double s_y, double s_xy) {
    return 0.5 * (s_x + s_y - s_xy);
}

double discernable_information(const DensityOperator& rho) {
    return std::log2(static_cast<double>(rho.dim())) - renyi_entropy(rho, 1.0);
}

namespace {

constexpr double kNegativeTol = 1e-12;

unsigned integer_bits(double value, const char* what) {
    const double rounded = std::round(value);
    if (!(value >= 0.0) || std::abs(value - rounded) > 1e-9 || rounded > 40.0) {
        throw std::invalid_argument(std::string(what) + " = " + std::to_string(value) +
                                    " must be a small nonnegative integer on the Monte Carlo path");
    }
    return static_cast<unsigned>(rounded);
}

void flag_negative(CurveResult& result, unsigned r, const char* column, double value) {
    if (value >= -kNegativeTol) return;
    std::ostringstream msg;
    msg << column << " = " << value << " at r = " << r
        << " is negative through approximation error; raw value kept";
    result.warnings.push_back(Warning{warning_code::kNegativeCorrelation, msg.str()});
}

// Assemble one curve point from the five independent entropies.  Sets that
// cover more than half of the pure total state take their entropy from the
// complement (S(ref,R,ext) = S(B), S(ref,B,ext) = S(R)); together with
// S(R,ext) = S(ref,B) and S(B,ext) = S(ref,R) sourced from the same values,
// this makes the monogamy sum rule exact rather than approximate.
CurvePoint assemble_point(unsigned r, double s_ref, double s_b, double s_r, double s_ref_b,
                          double s_ref_r) {
    const double s_r_ext = s_ref_b;
    const double s_b_ext = s_ref_r;
    CurvePoint point;
    point.r = r;
    point.c_ref_b = correlation(s_ref, s_b, s_ref_b);
    point.c_ref_rext = correlation(s_ref, s_r_ext, s_b);
    point.c_ref_bext = correlation(s_ref, s_b_ext, s_r);
    point.c_ref_r = correlation(s_ref, s_r, s_ref_r);
    point.residual_ab = point.c_ref_b + point.c_ref_rext - s_ref;
    point.residual_cd = point.c_ref_bext + point.c_ref_r - s_ref;
    return point;
}

CurveResult analytic_curves(const CurveConfig& config) {
    if (!config.ext.is_uniform()) {
        throw std::invalid_argument(
            "analytic curves require a uniform ext spectrum (the closed-form averaged purities "
            "assume a flat trans-horizon state); use the Monte Carlo path for explicit spectra");
    }
    const double n_rounded = std::round(config.n);
    if (!(config.n >= 0.0) || std::abs(config.n - n_rounded) > 1e-9) {
        throw std::invalid_argument("curves are evaluated at integer radiated counts; n = " +
                                    std::to_string(config.n) + " is not an integer");
    }
    const auto n_steps = static_cast<unsigned>(n_rounded);
    CurveResult result;
    result.points.reserve(n_steps + 1);
    for (unsigned r = 0; r <= n_steps; ++r) {
        const DimensionProfile dims =
            DimensionProfile::from_bits(config.k, config.n, config.ext.log2_count(), r);
        const double s_ref = entropy_estimate(average_purity(PurityTag::Ref, dims));
        const double s_b = entropy_estimate(average_purity(PurityTag::B, dims));
        const double s_r = entropy_estimate(average_purity(PurityTag::R, dims));
        // The closed forms for complementary halves coincide term by term, so
        // taking S(ref,B) for S(R,ext) loses nothing and gains exactness.
        const double s_ref_b = entropy_estimate(average_purity(PurityTag::RefB, dims));
        const double s_ref_r = entropy_estimate(average_purity(PurityTag::RefR, dims));
        result.points.push_back(assemble_point(r, s_ref, s_b, s_r, s_ref_b, s_ref_r));
    }
    for (const CurvePoint& p : result.points) {
        flag_negative(result, p.r, "C(ref:B)", p.c_ref_b);
        flag_negative(result, p.r, "C(ref:R,ext)", p.c_ref_rext);
        flag_negative(result, p.r, "C(ref:B,ext)", p.c_ref_bext);
        flag_negative(result, p.r, "C(ref:R)", p.c_ref_r);
    }
    return result;
}

CurveResult montecarlo_curves(const CurveConfig& config) {
    const unsigned k = integer_bits(config.k, "k");
    const unsigned n = integer_bits(config.n, "n");
    if (config.samples == 0) {
        throw std::invalid_argument("Monte Carlo curves require samples >= 1");
    }
    const std::size_t dim_int = std::size_t{1} << n;
    const std::size_t dim_total = (std::size_t{1} << k) * dim_int * config.ext.count();
    if (dim_total > kStateDimCap) {
        throw std::length_error("Monte Carlo curve state dimension " + std::to_string(dim_total) +
                                " exceeds the sampling cap " + std::to_string(kStateDimCap) +
                                "; use the analytic path for large dimensions");
    }
    const MultipartiteState base = build_entangled_model_state(k, n, config.ext);

    // Five entropies per (sample, r); slot layout keeps the reduction
    // deterministic for any worker count.
    const std::size_t rows = n + 1;
    std::vector<double> slots(config.samples * rows * 5, 0.0);
    const RandomStream root(config.seed);
    parallel_for(config.samples, config.workers, [&](std::size_t i) {
        RandomStream rs = root.substream(i);
        const Unitary u = haar_sample(dim_int, rs);
        const MultipartiteState scrambled = apply_unitary(base, {"int"}, u);
        const double s_ref = renyi_entropy(reduction_spectrum(scrambled, {"ref"}), 1.0);
        for (unsigned r = 0; r <= n; ++r) {
            const MultipartiteState split =
                split_label(scrambled, "int", Subsystem{"B", dim_int >> r},
                            Subsystem{"R", std::size_t{1} << r});
            double* row = slots.data() + (i * rows + r) * 5;
            row[0] = s_ref;
            row[1] = renyi_entropy(reduction_spectrum(split, {"B"}), 1.0);
            row[2] = renyi_entropy(reduction_spectrum(split, {"R"}), 1.0);
            row[3] = renyi_entropy(reduction_spectrum(split, {"ref", "B"}), 1.0);
            row[4] = renyi_entropy(reduction_spectrum(split, {"ref", "R"}), 1.0);
        }
    });

    CurveResult result;
    result.points.reserve(rows);
    const double inv = 1.0 / static_cast<double>(config.samples);
    for (unsigned r = 0; r <= n; ++r) {
        double mean[5] = {0.0, 0.0, 0.0, 0.0, 0.0};
        for (std::size_t i = 0; i < config.samples; ++i) {
            const double* row = slots.data() + (i * rows + r) * 5;
            for (int c = 0; c < 5; ++c) mean[c] += row[c];
        }
        for (double& m : mean) m *= inv;
        result.points.push_back(assemble_point(r, mean[0], mean[1], mean[2], mean[3], mean[4]));
    }
    for (const CurvePoint& p : result.points) {
        flag_negative(result, p.r, "C(ref:B)", p.c_ref_b);
        flag_negative(result, p.r, "C(ref:R,ext)", p.c_ref_rext);
        flag_negative(result, p.r, "C(ref:B,ext)", p.c_ref_bext);
        flag_negative(result, p.r, "C(ref:R)", p.c_ref_r);
    }
    return result;
}

} // namespace

CurveResult correlation_curves(const CurveConfig& config) {
    return config.path == CurvePath::Analytic ? analytic_curves(config)
                                              : montecarlo_curves(config);
}

std::vector<PulsePoint> radiation_information_pulse(unsigned n, std::size_t samples,
                                                    std::uint64_t seed, unsigned workers) {
    if (samples == 0) throw std::invalid_argument("pulse estimation requires samples >= 1");
    const std::size_t dim_int = std::size_t{1} << n;
    if (dim_int > kStateDimCap) {
        throw std::length_error("interior dimension " + std::to_string(dim_int) +
                                " exceeds the sampling cap " + std::to_string(kStateDimCap));
    }
    const MultipartiteState base = build_pure_model_state(0, n);
    const std::size_t rows = n + 1;
    std::vector<double> slots(samples * rows, 0.0);
    const RandomStream root(seed);
    parallel_for(samples, workers, [&](std::size_t i) {
        RandomStream rs = root.substream(i);
        const Unitary u = haar_sample(dim_int, rs);
        const MultipartiteState scrambled = apply_unitary(base, {"int"}, u);
        for (unsigned r = 0; r <= n; ++r) {
            const MultipartiteState split =
                split_label(scrambled, "int", Subsystem{"B", dim_int >> r},
                            Subsystem{"R", std::size_t{1} << r});
            const double s_r = renyi_entropy(reduction_spectrum(split, {"R"}), 1.0);
            slots[i * rows + r] = static_cast<double>(r) - s_r;
        }
    });

    std::vector<PulsePoint> pulse(rows);
    for (unsigned r = 0; r <= n; ++r) {
        double sum = 0.0;
        for (std::size_t i = 0; i < samples; ++i) sum += slots[i * rows + r];
        const double mean = sum / static_cast<double>(samples);
        double varsum = 0.0;
        for (std::size_t i = 0; i < samples; ++i) {
            const double d = slots[i * rows + r] - mean;
            varsum += d * d;
        }
        pulse[r].r = r;
        pulse[r].mean_bits = mean;
        pulse[r].std_error =
            samples > 1 ? std::sqrt(varsum / (static_cast<double>(samples) - 1.0) /
                                    static_cast<double>(samples))
                        : 0.0;
    }
    return pulse;
}

std::vector<double> ext_radiation_correlation(unsigned log2_ent, unsigned n, std::size_t samples,
                                              std::uint64_t seed, unsigned workers) {
    if (samples == 0) throw std::invalid_argument("correlation estimation requires samples >= 1");
    const std::size_t dim_int = std::size_t{1} << n;
    const std::size_t dim_total = dim_int * (std::size_t{1} << log2_ent);
    if (dim_total > kStateDimCap) {
        throw std::length_error("state dimension " + std::to_string(dim_total) +
                                " exceeds the sampling cap " + std::to_string(kStateDimCap));
    }
    const MultipartiteState base = build_uniform_entangled_state(log2_ent, n);
    const std::size_t rows = n + 1;
    std::vector<double> slots(samples * rows, 0.0);
    const RandomStream root(seed);
    parallel_for(samples, workers, [&](std::size_t i) {
        RandomStream rs = root.substream(i);
        const Unitary u = haar_sample(dim_int, rs);
        const MultipartiteState scrambled = apply_unitary(base, {"int"}, u);
        const double s_ext = renyi_entropy(reduction_spectrum(scrambled, {"ext"}), 1.0);
        for (unsigned r = 0; r <= n; ++r) {
            const MultipartiteState split =
                split_label(scrambled, "int", Subsystem{"B", dim_int >> r},
                            Subsystem{"R", std::size_t{1} << r});
            const double s_r = renyi_entropy(reduction_spectrum(split, {"R"}), 1.0);
            const double s_ext_r = renyi_entropy(reduction_spectrum(split, {"R", "ext"}), 1.0);
            slots[i * rows + r] = correlation(s_ext, s_r, s_ext_r);
        }
    });

    std::vector<double> mean(rows, 0.0);
    for (unsigned r = 0; r <= n; ++r) {
        double sum = 0.0;
        for (std::size_t i = 0; i < samples; ++i) sum += slots[i * rows + r];
        mean[r] = sum / static_cast<double>(samples);
    }
    return mean;
}

} // namespace evap
