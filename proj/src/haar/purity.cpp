// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/haar/purity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "evap/haar/exact.hpp"

namespace evap {

const std::vector<PurityTag>& all_purity_tags() {
    static const std::vector<PurityTag> tags = {
        PurityTag::Ref,  PurityTag::Ext,  PurityTag::RefExt, PurityTag::R,    PurityTag::B,
        PurityTag::RExt, PurityTag::BExt, PurityTag::RefR,   PurityTag::RefB};
    return tags;
}

std::string to_string(PurityTag tag) {
    switch (tag) {
        case PurityTag::Ref: return "ref";
        case PurityTag::Ext: return "ext";
        case PurityTag::RefExt: return "ref,ext";
        case PurityTag::R: return "R";
        case PurityTag::B: return "B";
        case PurityTag::RExt: return "R,ext";
        case PurityTag::BExt: return "B,ext";
        case PurityTag::RefR: return "ref,R";
        case PurityTag::RefB: return "ref,B";
    }
    throw std::invalid_argument("unknown purity tag");
}

PurityTag purity_tag_from_string(const std::string& name) {
    for (PurityTag tag : all_purity_tags()) {
        if (to_string(tag) == name) return tag;
    }
    throw std::invalid_argument("unknown purity tag '" + name + "'");
}

std::optional<PurityTag> complement_pair(PurityTag tag) {
    switch (tag) {
        case PurityTag::RefB: return PurityTag::RExt;
        case PurityTag::RExt: return PurityTag::RefB;
        case PurityTag::RefR: return PurityTag::BExt;
        case PurityTag::BExt: return PurityTag::RefR;
        default: return std::nullopt;
    }
}

DimensionProfile DimensionProfile::from_bits(double k, double n, double log2_ext, double r) {
    constexpr double kSlack = 1e-9;
    if (!(k >= 0.0) || !(n >= 0.0) || !(log2_ext >= 0.0) || !(r >= 0.0)) {
        throw std::invalid_argument("dimension bits must be nonnegative");
    }
    if (r > n + kSlack) {
        throw std::invalid_argument("radiated bits r = " + std::to_string(r) +
                                    " exceed interior size n = " + std::to_string(n));
    }
    if (k + log2_ext > n + kSlack) {
        throw std::invalid_argument("embedding requires k + log2N <= n; got " +
                                    std::to_string(k + log2_ext) + " > " + std::to_string(n));
    }
    DimensionProfile p;
    p.log2_ref = k;
    p.log2_ext = log2_ext;
    p.log2_radiated = std::min(r, n);
    p.log2_retained = n - p.log2_radiated;
    return p;
}

LogReal average_purity(PurityTag tag, const DimensionProfile& dims) {
    const double lk = dims.log2_ref;
    const double le = dims.log2_ext;
    const double lr = dims.log2_radiated;
    const double lb = dims.log2_retained;

    switch (tag) {
        case PurityTag::Ref: return LogReal::from_log2(-lk);
        case PurityTag::Ext: return LogReal::from_log2(-le);
        case PurityTag::RefExt: return LogReal::from_log2(-(lk + le));
        default: break;
    }
    if (lr + lb == 0.0) {
        // One-point interior: every interior-rooted reduction is pure.
        return LogReal::one();
    }

    // Both numerator terms of every interior-rooted average:
    // u = R (B^2 - 1), v = B (R^2 - 1); denominator D = (RB)^2 - 1.
    const LogReal u = LogReal::from_log2(lr) * pow2_minus_one(2.0 * lb);
    const LogReal v = LogReal::from_log2(lb) * pow2_minus_one(2.0 * lr);
    const LogReal denom = pow2_minus_one(2.0 * (lr + lb));
    auto scaled = [](const LogReal& t, double bits) {
        return t * LogReal::from_log2(-bits);
    };

    LogReal numer;
    switch (tag) {
        case PurityTag::R: numer = u + scaled(v, lk + le); break;
        case PurityTag::B: numer = v + scaled(u, lk + le); break;
        case PurityTag::RExt: numer = scaled(u, le) + scaled(v, lk); break;
        case PurityTag::BExt: numer = scaled(v, le) + scaled(u, lk); break;
        case PurityTag::RefR: numer = scaled(u, lk) + scaled(v, le); break;
        case PurityTag::RefB: numer = scaled(v, lk) + scaled(u, le); break;
        default: throw std::invalid_argument("unknown purity tag");
    }
    return numer / denom;
}

SchurCoefficients schur_average_swap(std::size_t dim_a1, std::size_t dim_a2) {
    if (dim_a1 == 0 || dim_a2 == 0) {
        throw std::invalid_argument("schur_average_swap requires dimensions >= 1");
    }
    const double a1 = static_cast<double>(dim_a1);
    const double a2 = static_cast<double>(dim_a2);
    const double a = a1 * a2;
    if (dim_a1 * dim_a2 == 1) {
        // The twirl over U(1) is the identity map; the swap passes through.
        return SchurCoefficients{0.0, 1.0};
    }
    const double denom = a * a - 1.0;
    return SchurCoefficients{a2 * (a1 * a1 - 1.0) / denom, a1 * (a2 * a2 - 1.0) / denom};
}

Eigen::MatrixXcd schur_swap_operator(std::size_t dim_a1, std::size_t dim_a2) {
    const std::size_t a = dim_a1 * dim_a2;
    if (a == 0) throw std::invalid_argument("schur_swap_operator requires dimensions >= 1");
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(a * a, a * a);
    for (std::size_t x1 = 0; x1 < dim_a1; ++x1) {
        for (std::size_t x2 = 0; x2 < dim_a2; ++x2) {
            for (std::size_t y1 = 0; y1 < dim_a1; ++y1) {
                for (std::size_t y2 = 0; y2 < dim_a2; ++y2) {
                    const std::size_t col = (x1 * dim_a2 + x2) * a + (y1 * dim_a2 + y2);
                    const std::size_t row = (x1 * dim_a2 + y2) * a + (y1 * dim_a2 + x2);
                    s(row, col) = 1.0;
                }
            }
        }
    }
    return s;
}

double entropy_estimate(double mean_purity) {
    if (!(mean_purity > 0.0) || mean_purity > 1.0 + 1e-12) {
        throw std::invalid_argument("mean purity must lie in (0, 1]");
    }
    return std::max(0.0, -std::log2(mean_purity));
}

double entropy_estimate(const LogReal& mean_purity) {
    if (mean_purity.sign() <= 0 || mean_purity.log2() > 1e-12) {
        throw std::invalid_argument("mean purity must lie in (0, 1]");
    }
    return std::max(0.0, -mean_purity.log2());
}

ChiProfile chi(double q, double n, double k, const ExtSpectrum& ext) {
    if (!(q > 0.0)) throw std::invalid_argument("Renyi order q must be positive");
    if (!(k >= 0.0) || !(n >= k)) {
        throw std::invalid_argument("require 0 <= k <= n for the information deficit");
    }
    const double h_ext = ext.renyi_bits(q);
    const double value = (n - k) - h_ext;
    constexpr double kSlack = 1e-9;
    if (value < -kSlack || value > (n - k) + kSlack) {
        throw std::domain_error("information deficit " + std::to_string(value) +
                                " lies outside its admissible range [0, " + std::to_string(n - k) +
                                "]: the exterior spectrum is inconsistent with the interior size");
    }
    return ChiProfile{q, std::clamp(value, 0.0, n - k)};
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

cpp_int pow2_int(unsigned e) { return cpp_int(1) << e; }

} // namespace

cpp_rational average_purity_exact(PurityTag tag, unsigned k, unsigned n, unsigned log2_ext,
                                  unsigned r) {
    constexpr unsigned kExponentCap = 30;
    if (k > kExponentCap || n > kExponentCap || log2_ext > kExponentCap || r > kExponentCap) {
        throw std::invalid_argument("exact purity path caps exponents at 30 bits");
    }
    if (r > n || k + log2_ext > n) {
        throw std::invalid_argument("exact purity path requires r <= n and k + log2N <= n");
    }
    const cpp_int big_k = pow2_int(k);
    const cpp_int big_n = pow2_int(log2_ext);
    const cpp_int big_r = pow2_int(r);
    const cpp_int big_b = pow2_int(n - r);

    switch (tag) {
        case PurityTag::Ref: return cpp_rational(1, big_k);
        case PurityTag::Ext: return cpp_rational(1, big_n);
        case PurityTag::RefExt: return cpp_rational(1, big_k * big_n);
        default: break;
    }
    if (big_r == 1 && big_b == 1) return cpp_rational(1);

    const cpp_rational u(big_r * (big_b * big_b - 1));
    const cpp_rational v(big_b * (big_r * big_r - 1));
    const cpp_rational denom(big_r * big_b * big_r * big_b - 1);
    const cpp_rational inv_k(1, big_k);
    const cpp_rational inv_n(1, big_n);

    cpp_rational numer;
    switch (tag) {
        case PurityTag::R: numer = u + v * inv_k * inv_n; break;
        case PurityTag::B: numer = v + u * inv_k * inv_n; break;
        case PurityTag::RExt: numer = u * inv_n + v * inv_k; break;
        case PurityTag::BExt: numer = v * inv_n + u * inv_k; break;
        case PurityTag::RefR: numer = u * inv_k + v * inv_n; break;
        case PurityTag::RefB: numer = v * inv_k + u * inv_n; break;
        default: throw std::invalid_argument("unknown purity tag");
    }
    return numer / denom;
}

} // namespace evap
