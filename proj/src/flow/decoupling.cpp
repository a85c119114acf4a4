// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/flow/decoupling.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include <Eigen/Dense>

#include "evap/core/ops.hpp"
#include "evap/core/parallel.hpp"
#include "evap/core/spectral.hpp"
#include "evap/core/unitary.hpp"
#include "evap/flow/correlation.hpp"

namespace evap {

namespace {

struct ResolvedPartition {
    std::vector<std::string> x, y, y2, z;
    std::vector<std::string> canonical;  ///< x, y1, y2, z
    std::size_t dim_x = 1, dim_y1 = 1, dim_y2 = 1, dim_z = 1;
};

ResolvedPartition resolve_partition(const MultipartiteState& psi,
                                    const DecouplingPartition& roles) {
    ResolvedPartition p;
    std::unordered_set<std::string> seen;
    auto take = [&](const std::vector<std::string>& names, std::size_t& dim_out,
                    const char* role) {
        for (const auto& name : names) {
            if (!seen.insert(name).second) {
                throw std::invalid_argument("decoupling role " + std::string(role) +
                                            ": label '" + name + "' is assigned twice");
            }
            dim_out *= psi.label_dim(name);
            p.canonical.push_back(name);
        }
    };
    take(roles.x, p.dim_x, "X");
    take(roles.y1, p.dim_y1, "Y1");
    take(roles.y2, p.dim_y2, "Y2");
    take(roles.z, p.dim_z, "Z");
    if (p.canonical.size() != psi.labels().size()) {
        std::ostringstream msg;
        msg << "decoupling roles must cover every subsystem; unassigned:";
        for (const auto& l : psi.labels()) {
            if (!seen.count(l.name)) msg << " '" << l.name << "'";
        }
        throw std::invalid_argument(msg.str());
    }
    if (roles.y1.empty() && roles.y2.empty()) {
        throw std::invalid_argument("decoupling requires at least one scrambled label in Y1 or Y2");
    }
    p.x = roles.x;
    p.y = roles.y1;
    p.y.insert(p.y.end(), roles.y2.begin(), roles.y2.end());
    p.y2 = roles.y2;
    p.z = roles.z;
    return p;
}

std::vector<std::string> concat(const std::vector<std::string>& a,
                                const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

double trace_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    return a.cwiseProduct(b.transpose()).sum().real();
}

/// Eigendecomposition with support-restricted powers: eigenvalues below the
/// spectral floor are treated as exact zeros, so negative exponents act as
/// pseudo-inverses on the support.
class SpectralPowers {
public:
    explicit SpectralPowers(const DensityOperator& rho) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("eigendecomposition failed");
        }
        vals_ = solver.eigenvalues();
        vecs_ = solver.eigenvectors();
        for (Eigen::Index i = 0; i < vals_.size(); ++i) {
            if (vals_(i) < -1e-10) {
                throw std::domain_error("operator has negative eigenvalue " +
                                        std::to_string(vals_(i)));
            }
            if (vals_(i) < kEigenvalueFloor) vals_(i) = 0.0;
        }
    }

    Eigen::MatrixXcd power(double p) const {
        Eigen::VectorXd pw(vals_.size());
        for (Eigen::Index i = 0; i < vals_.size(); ++i) {
            pw(i) = vals_(i) > 0.0 ? std::pow(vals_(i), p) : 0.0;
        }
        return vecs_ * pw.asDiagonal() * vecs_.adjoint();
    }

    double trace_power(double p) const {
        double sum = 0.0;
        for (Eigen::Index i = 0; i < vals_.size(); ++i) {
            if (vals_(i) > 0.0) sum += std::pow(vals_(i), p);
        }
        return sum;
    }

private:
    Eigen::VectorXd vals_;
    Eigen::MatrixXcd vecs_;
};

void check_product_hypothesis(const DecouplingInputs& in) {
    const Eigen::MatrixXcd product = kron(in.rho_x.matrix(), in.rho_z.matrix());
    const double distance = 0.5 * hermitian_trace_norm(in.rho_xz.matrix() - product);
    if (distance > kProductTolerance) {
        std::ostringstream msg;
        msg << "product hypothesis failed: trace distance between rho_XZ and rho_X (x) rho_Z is "
            << distance << " > " << kProductTolerance;
        throw std::domain_error(msg.str());
    }
}

void check_dimensions(const DecouplingInputs& in) {
    if (!(in.dim_y1 >= 1.0) || !(in.dim_y2 >= 1.0)) {
        throw std::invalid_argument("decoupling bound requires Y dimensions >= 1");
    }
    const auto dim_y = static_cast<std::size_t>(std::llround(in.dim_y1 * in.dim_y2));
    if (in.rho_x.dim() * in.rho_z.dim() != in.rho_xz.dim()) {
        throw std::invalid_argument("rho_XZ dimension does not match rho_X x rho_Z");
    }
    if (in.rho_xz.dim() * dim_y != in.rho_xyz.dim()) {
        throw std::invalid_argument("rho_XYZ dimension does not match rho_XZ and the Y dims");
    }
    if (in.rho_z.dim() * dim_y != in.rho_yz.dim()) {
        throw std::invalid_argument("rho_YZ dimension does not match rho_Z and the Y dims");
    }
}

} // namespace

DecouplingInputs decoupling_inputs(const MultipartiteState& psi,
                                   const DecouplingPartition& roles) {
    const ResolvedPartition p = resolve_partition(psi, roles);
    if (psi.dim() > kDensityDimCap) {
        throw std::length_error("total state dimension " + std::to_string(psi.dim()) +
                                " exceeds the dense density cap " +
                                std::to_string(kDensityDimCap));
    }
    const MultipartiteState canon = permute_subsystems(psi, p.canonical);
    DecouplingInputs in{
        reduced_density(canon, p.x),
        reduced_density(canon, p.z),
        reduced_density(canon, concat(p.x, p.z)),
        reduced_density(canon, concat(p.y, p.z)),
        reduced_density(canon, p.canonical),
        static_cast<double>(p.dim_y1),
        static_cast<double>(p.dim_y2),
    };
    return in;
}

Estimate decoupling_lhs(const MultipartiteState& psi, const DecouplingPartition& roles,
                        std::size_t samples, const RandomStream& stream, unsigned workers) {
    if (samples == 0) throw std::invalid_argument("decoupling_lhs requires samples >= 1");
    const ResolvedPartition p = resolve_partition(psi, roles);
    if (psi.dim() > kStateDimCap) {
        throw std::length_error("state dimension " + std::to_string(psi.dim()) +
                                " exceeds the sampling cap " + std::to_string(kStateDimCap));
    }
    const std::size_t dim_sigma = p.dim_x * p.dim_y2 * p.dim_z;
    if (dim_sigma > kDensityDimCap) {
        throw std::length_error("surviving density dimension " + std::to_string(dim_sigma) +
                                " exceeds the dense density cap " +
                                std::to_string(kDensityDimCap));
    }
    const MultipartiteState canon = permute_subsystems(psi, p.canonical);
    const std::size_t dim_y = p.dim_y1 * p.dim_y2;
    const std::vector<std::string> keep_xy2z = concat(p.x, concat(p.y2, p.z));
    const std::vector<std::string> keep_y2z = concat(p.y2, p.z);

    if (p.dim_x == 1) {
        // sigma_X is the scalar [1] by trace normalization, so the distance
        // is identically zero for every draw; skip the numerics.
        return Estimate{0.0, 0.0, samples};
    }
    std::vector<double> norms(samples, 0.0);
    parallel_for(samples, workers, [&](std::size_t i) {
        RandomStream rs = stream.substream(i);
        const Unitary u = haar_sample(dim_y, rs);
        const MultipartiteState rotated = apply_unitary(canon, p.y, u);
        const DensityOperator sigma = partial_trace(rotated, keep_xy2z);
        const DensityOperator sigma_x = partial_trace(sigma, p.x);
        const DensityOperator sigma_y2z = partial_trace(sigma, keep_y2z);
        const Eigen::MatrixXcd diff =
            sigma.matrix() - kron(sigma_x.matrix(), sigma_y2z.matrix());
        norms[i] = hermitian_trace_norm(diff);
    });

    Estimate est;
    est.samples = samples;
    double sum = 0.0;
    for (double v : norms) sum += v;
    est.mean = sum / static_cast<double>(samples);
    double varsum = 0.0;
    for (double v : norms) varsum += (v - est.mean) * (v - est.mean);
    est.std_error = samples > 1
                        ? std::sqrt(varsum / (static_cast<double>(samples) - 1.0) /
                                    static_cast<double>(samples))
                        : 0.0;
    return est;
}

double decoupling_rhs(const DecouplingInputs& in, double two_nu, double two_mu,
                      BoundLevel level) {
    if (!(two_nu >= 0.0 && two_nu <= 1.0) || !(two_mu >= 0.0 && two_mu <= 1.0)) {
        throw std::invalid_argument("decoupling exponents 2nu, 2mu must lie in [0, 1]");
    }
    check_dimensions(in);
    const double ratio = in.dim_y2 / in.dim_y1;

    if (level == BoundLevel::PureRenyiHalf) {
        check_product_hypothesis(in);
        const double impurity = 1.0 - purity(in.rho_xyz);
        if (impurity > kPurityTolerance) {
            std::ostringstream msg;
            msg << "pure-state hypothesis failed: 1 - tr rho_XYZ^2 = " << impurity << " > "
                << kPurityTolerance;
            throw std::domain_error(msg.str());
        }
        if (std::abs(two_nu - 0.5) > 1e-12 || std::abs(two_mu - 0.5) > 1e-12) {
            throw std::domain_error(
                "exponent hypothesis failed: the collapsed bound requires 2nu = 2mu = 1/2");
        }
        const double h_x = renyi_entropy(in.rho_x, 0.5);
        const double h_z = renyi_entropy(in.rho_z, 0.5);
        return 2.0 * ratio * std::exp2(h_x + h_z);
    }

    const SpectralPowers px(in.rho_x);
    const SpectralPowers pz(in.rho_z);
    const double prefactor = px.trace_power(two_nu) * pz.trace_power(two_mu);
    const Eigen::MatrixXcd inv_x = px.power(-two_nu);
    const Eigen::MatrixXcd inv_z = pz.power(-two_mu);
    const auto dim_y =
        static_cast<Eigen::Index>(std::llround(in.dim_y1 * in.dim_y2));
    const Eigen::MatrixXcd eye_y = Eigen::MatrixXcd::Identity(dim_y, dim_y);

    // T4 = tr[rho_XYZ^2 (X^{-2nu} (x) I_Y (x) Z^{-2mu})]
    const Eigen::MatrixXcd sandwich_xyz = kron(inv_x, kron(eye_y, inv_z));
    const Eigen::MatrixXcd rho_xyz_sq = in.rho_xyz.matrix() * in.rho_xyz.matrix();
    const double t4 = trace_product(rho_xyz_sq, sandwich_xyz);
    // T5 = tr[rho_X^{2-2nu}] tr[rho_YZ^2 (I_Y (x) Z^{-2mu})]
    const Eigen::MatrixXcd rho_yz_sq = in.rho_yz.matrix() * in.rho_yz.matrix();
    const double t5 = px.trace_power(2.0 - two_nu) * trace_product(rho_yz_sq, kron(eye_y, inv_z));
    const double tail = ratio * (t4 + t5);

    if (level == BoundLevel::Product) {
        check_product_hypothesis(in);
        // The dropped bracket vanishes identically when rho_XZ is a product.
        return prefactor * tail;
    }

    // T1 = tr[rho_XZ^2 (X^{-2nu} (x) Z^{-2mu})]
    const Eigen::MatrixXcd rho_xz_sq = in.rho_xz.matrix() * in.rho_xz.matrix();
    const double t1 = trace_product(rho_xz_sq, kron(inv_x, inv_z));
    // T2 = tr[rho_XZ (X^{1-2nu} (x) Z^{1-2mu})]
    const double t2 = trace_product(in.rho_xz.matrix(),
                                    kron(px.power(1.0 - two_nu), pz.power(1.0 - two_mu)));
    // T3 = tr[rho_X^{2-2nu}] tr[rho_Z^{2-2mu}]
    const double t3 = px.trace_power(2.0 - two_nu) * pz.trace_power(2.0 - two_mu);
    return prefactor * ((t1 - 2.0 * t2 + t3) + tail);
}

double ext_decoupling_bound(double h_bits, double dim_y1, double dim_y2) {
    if (!(dim_y1 >= 1.0) || !(dim_y2 >= 1.0)) {
        throw std::invalid_argument("subsystem dimensions must be >= 1");
    }
    return std::sqrt(2.0 * (dim_y2 / dim_y1) * std::exp2(h_bits));
}

double ext_decoupling_bound_log2(double h_bits, double log2_y1, double log2_y2) {
    return 0.5 * (1.0 + log2_y2 - log2_y1 + h_bits);
}

double fidelity_floor_from_bound(double squared_bound) {
    if (!(squared_bound >= 0.0)) {
        throw std::invalid_argument("bound must be nonnegative");
    }
    return std::max(0.0, 1.0 - std::sqrt(0.5 * squared_bound));
}

double fidelity_floor_from_trace_norm(double trace_norm_distance) {
    if (!(trace_norm_distance >= 0.0)) {
        throw std::invalid_argument("trace-norm distance must be nonnegative");
    }
    return std::max(0.0, 1.0 - 0.5 * trace_norm_distance);
}

} // namespace evap
