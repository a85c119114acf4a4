// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/core/spectral.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace evap {

namespace {

// Clamp an eigenvalue of a nominal density operator: exact zeros for
// round-off negatives, rejection beyond the PSD tolerance.
double clamp_eigenvalue(double lambda) {
    if (lambda < -DensityOperator::kTolerance) {
        throw std::domain_error("operator has eigenvalue " + std::to_string(lambda) +
                                " below the positivity tolerance");
    }
    return lambda < kEigenvalueFloor ? 0.0 : lambda;
}

double renyi_from_values(const Eigen::VectorXd& values, double q) {
    if (!(q > 0.0)) {
        throw std::invalid_argument("Renyi order q must be positive");
    }
    if (std::abs(q - 1.0) < 1e-12) {
        double h = 0.0;
        for (Eigen::Index i = 0; i < values.size(); ++i) {
            const double lambda = clamp_eigenvalue(values(i));
            if (lambda > 0.0) h -= lambda * std::log2(lambda);
        }
        return h;
    }
    double sum = 0.0;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        const double lambda = clamp_eigenvalue(values(i));
        if (lambda > 0.0) sum += std::pow(lambda, q);
    }
    if (sum <= 0.0) {
        throw std::domain_error("spectrum has no weight above the eigenvalue floor");
    }
    return std::log2(sum) / (1.0 - q);
}

} // namespace

double renyi_entropy(const DensityOperator& rho, double q) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(), Eigen::EigenvaluesOnly);
    return renyi_from_values(solver.eigenvalues(), q);
}

double renyi_entropy(const Eigen::VectorXd& spectrum, double q) {
    if (std::abs(spectrum.sum() - 1.0) > 1e-8) {
        throw std::invalid_argument("spectrum does not sum to 1 within 1e-8");
    }
    return renyi_from_values(spectrum, q);
}

double trace_norm(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("trace_norm requires a square matrix");
    }
    if (a.rows() == 0) return 0.0;
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues().sum();
}

double hermitian_trace_norm(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_trace_norm requires a square matrix");
    }
    const double herm_dev = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-10) {
        throw std::invalid_argument("matrix is not Hermitian within tolerance");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityOperator& rho, const DensityOperator& sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("fidelity requires operators of equal dimension");
    }
    auto sqrt_of = [](const DensityOperator& op) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(op.matrix());
        Eigen::VectorXd vals = solver.eigenvalues();
        for (Eigen::Index i = 0; i < vals.size(); ++i) {
            vals(i) = std::sqrt(clamp_eigenvalue(vals(i)));
        }
        return Eigen::MatrixXcd(solver.eigenvectors() * vals.asDiagonal() *
                                solver.eigenvectors().adjoint());
    };
    return trace_norm(sqrt_of(rho) * sqrt_of(sigma));
}

double purity(const DensityOperator& rho) {
    return rho.matrix().squaredNorm();
}

Eigen::MatrixXcd swap_operator(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("swap_operator requires dimension >= 1");
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim * dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            s(j * dim + i, i * dim + j) = 1.0;
        }
    }
    return s;
}

} // namespace evap
