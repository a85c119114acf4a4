// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "evap/core/density.hpp"
#include "evap/core/state.hpp"
#include "evap/core/subsystem.hpp"
#include "evap/core/unitary.hpp"

namespace evap {

std::size_t total_dimension(const std::vector<Subsystem>& labels) {
    std::size_t d = 1;
    for (const auto& l : labels) d *= l.dim;
    return d;
}

std::size_t find_label(const std::vector<Subsystem>& labels, std::string_view name) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].name == name) return i;
    }
    std::ostringstream msg;
    msg << "unknown subsystem label '" << name << "'; known labels:";
    for (const auto& l : labels) msg << " '" << l.name << "'";
    throw std::invalid_argument(msg.str());
}

bool has_label(const std::vector<Subsystem>& labels, std::string_view name) {
    for (const auto& l : labels) {
        if (l.name == name) return true;
    }
    return false;
}

void validate_labels(const std::vector<Subsystem>& labels) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (l.dim < 1) {
            throw std::invalid_argument("subsystem '" + l.name + "' has dimension 0");
        }
        if (!seen.insert(l.name).second) {
            throw std::invalid_argument("duplicate subsystem label '" + l.name + "'");
        }
    }
}

MultipartiteState::MultipartiteState(std::vector<Subsystem> labels, Eigen::VectorXcd amplitudes)
    : labels_(std::move(labels)), amps_(std::move(amplitudes)) {
    validate_labels(labels_);
    const std::size_t d = total_dimension(labels_);
    if (static_cast<std::size_t>(amps_.size()) != d) {
        throw std::invalid_argument("amplitude vector length " + std::to_string(amps_.size()) +
                                    " does not match label dimension product " + std::to_string(d));
    }
    const double norm2 = amps_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state squared norm " + std::to_string(norm2) +
                                    " deviates from 1 beyond tolerance");
    }
}

DensityOperator::DensityOperator(std::vector<Subsystem> labels, Eigen::MatrixXcd matrix)
    : labels_(std::move(labels)), mat_(std::move(matrix)) {
    validate_labels(labels_);
    if (mat_.rows() != mat_.cols()) {
        throw std::invalid_argument("density operator matrix must be square");
    }
    const std::size_t d = total_dimension(labels_);
    if (static_cast<std::size_t>(mat_.rows()) != d) {
        throw std::invalid_argument("density matrix dimension " + std::to_string(mat_.rows()) +
                                    " does not match label dimension product " + std::to_string(d));
    }
    const double herm_dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kTolerance) {
        throw std::invalid_argument("density operator is not Hermitian (max deviation " +
                                    std::to_string(herm_dev) + ")");
    }
    const std::complex<double> tr = mat_.trace();
    if (std::abs(tr - std::complex<double>(1.0, 0.0)) > kTolerance) {
        throw std::invalid_argument("density operator trace deviates from 1 beyond tolerance");
    }
}

Unitary::Unitary(Eigen::MatrixXcd matrix) : mat_(std::move(matrix)) {
    if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
        throw std::invalid_argument("unitary matrix must be square and nonempty");
    }
    const std::size_t d = static_cast<std::size_t>(mat_.rows());
    const double dev = (mat_.adjoint() * mat_ - Eigen::MatrixXcd::Identity(d, d)).norm();
    if (dev > kTolerance) {
        throw std::invalid_argument("matrix is not unitary (Frobenius deviation " +
                                    std::to_string(dev) + ")");
    }
}

Unitary haar_sample(std::size_t dim, RandomStream& stream) {
    if (dim == 0) throw std::invalid_argument("haar_sample requires dimension >= 1");
    Eigen::MatrixXcd ginibre(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t row = 0; row < dim; ++row) {
            ginibre(row, col) = std::complex<double>(stream.normal(), stream.normal());
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::VectorXcd r_diag = qr.matrixQR().diagonal();
    for (std::size_t col = 0; col < dim; ++col) {
        const double mag = std::abs(r_diag(col));
        const std::complex<double> phase = mag > 0.0 ? r_diag(col) / mag : std::complex<double>(1.0, 0.0);
        q.col(col) *= phase;
    }
    return Unitary(std::move(q));
}

} // namespace evap
