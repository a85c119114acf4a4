// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/core/ops.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace evap {

namespace {

// Row-major strides: stride[i] = product of dims of labels after i.
std::vector<std::size_t> strides_of(const std::vector<Subsystem>& labels) {
    std::vector<std::size_t> s(labels.size(), 1);
    for (std::size_t i = labels.size(); i-- > 1;) {
        s[i - 1] = s[i] * labels[i].dim;
    }
    return s;
}

// Flat offsets of every multi-index over the subset `sel` of label positions,
// enumerated row-major in the order sel is given (sel[0] most significant).
std::vector<std::size_t> subset_offsets(const std::vector<Subsystem>& labels,
                                        const std::vector<std::size_t>& strides,
                                        const std::vector<std::size_t>& sel) {
    std::vector<std::size_t> offsets{0};
    for (std::size_t pos : sel) {
        const std::size_t d = labels[pos].dim;
        const std::size_t stride = strides[pos];
        std::vector<std::size_t> next;
        next.reserve(offsets.size() * d);
        for (std::size_t base : offsets) {
            for (std::size_t digit = 0; digit < d; ++digit) {
                next.push_back(base + digit * stride);
            }
        }
        offsets = std::move(next);
    }
    return offsets;
}

std::vector<std::size_t> positions_of(const std::vector<Subsystem>& labels,
                                      const std::vector<std::string>& names) {
    std::unordered_set<std::string> seen;
    std::vector<std::size_t> pos;
    pos.reserve(names.size());
    for (const auto& name : names) {
        if (!seen.insert(name).second) {
            throw std::invalid_argument("label '" + name + "' listed twice");
        }
        pos.push_back(find_label(labels, name));
    }
    return pos;
}

std::vector<std::size_t> complement_positions(std::size_t count, const std::vector<std::size_t>& sel) {
    std::vector<bool> used(count, false);
    for (std::size_t p : sel) used[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < count; ++i) {
        if (!used[i]) rest.push_back(i);
    }
    return rest;
}

// Reshape a pure state into the (sel x complement) coefficient matrix.
Eigen::MatrixXcd bipartition_matrix(const MultipartiteState& psi, const std::vector<std::size_t>& sel,
                                    const std::vector<std::size_t>& rest) {
    const auto strides = strides_of(psi.labels());
    const auto row_off = subset_offsets(psi.labels(), strides, sel);
    const auto col_off = subset_offsets(psi.labels(), strides, rest);
    Eigen::MatrixXcd m(row_off.size(), col_off.size());
    const auto& amps = psi.amplitudes();
    for (std::size_t j = 0; j < col_off.size(); ++j) {
        for (std::size_t i = 0; i < row_off.size(); ++i) {
            m(i, j) = amps(row_off[i] + col_off[j]);
        }
    }
    return m;
}

std::vector<Subsystem> pick_labels(const std::vector<Subsystem>& labels,
                                   const std::vector<std::size_t>& sel) {
    std::vector<Subsystem> out;
    out.reserve(sel.size());
    for (std::size_t p : sel) out.push_back(labels[p]);
    return out;
}

// Validate that `pos` is a contiguous ascending run of label positions.
void require_contiguous(const std::vector<std::size_t>& pos, const char* what) {
    if (pos.empty()) throw std::invalid_argument(std::string(what) + ": no labels given");
    for (std::size_t i = 1; i < pos.size(); ++i) {
        if (pos[i] != pos[i - 1] + 1) {
            throw std::invalid_argument(std::string(what) +
                                        ": labels must form a contiguous run in tensor order");
        }
    }
}

} // namespace

MultipartiteState tensor(const MultipartiteState& a, const MultipartiteState& b) {
    std::vector<Subsystem> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    Eigen::VectorXcd amps(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        amps.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
    }
    return MultipartiteState(std::move(labels), std::move(amps));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
    std::vector<Subsystem> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    const std::size_t da = a.dim(), db = b.dim();
    Eigen::MatrixXcd m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            m.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
        }
    }
    return DensityOperator(std::move(labels), std::move(m));
}

DensityOperator partial_trace(const DensityOperator& rho, const std::vector<std::string>& keep) {
    auto sel = positions_of(rho.labels(), keep);
    std::sort(sel.begin(), sel.end());  // kept labels preserve input order
    const auto rest = complement_positions(rho.labels().size(), sel);
    const auto strides = strides_of(rho.labels());
    const auto keep_off = subset_offsets(rho.labels(), strides, sel);
    const auto rest_off = subset_offsets(rho.labels(), strides, rest);
    const std::size_t kd = keep_off.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(kd, kd);
    const auto& m = rho.matrix();
    for (std::size_t t : rest_off) {
        for (std::size_t j = 0; j < kd; ++j) {
            for (std::size_t i = 0; i < kd; ++i) {
                out(i, j) += m(keep_off[i] + t, keep_off[j] + t);
            }
        }
    }
    return DensityOperator(pick_labels(rho.labels(), sel), std::move(out));
}

DensityOperator partial_trace(const MultipartiteState& psi, const std::vector<std::string>& keep) {
    auto sel = positions_of(psi.labels(), keep);
    std::sort(sel.begin(), sel.end());
    const auto rest = complement_positions(psi.labels().size(), sel);
    const Eigen::MatrixXcd m = bipartition_matrix(psi, sel, rest);
    return DensityOperator(pick_labels(psi.labels(), sel), m * m.adjoint());
}

DensityOperator reduced_density(const MultipartiteState& psi, const std::vector<std::string>& keep) {
    const auto sel = positions_of(psi.labels(), keep);
    const auto rest = complement_positions(psi.labels().size(), sel);
    const Eigen::MatrixXcd m = bipartition_matrix(psi, sel, rest);
    return DensityOperator(pick_labels(psi.labels(), sel), m * m.adjoint());
}

Eigen::VectorXd reduction_spectrum(const MultipartiteState& psi, const std::vector<std::string>& keep) {
    const auto sel = positions_of(psi.labels(), keep);
    const auto rest = complement_positions(psi.labels().size(), sel);
    const Eigen::MatrixXcd m = bipartition_matrix(psi, sel, rest);
    // The Gram matrix of the smaller side carries the full nonzero spectrum.
    Eigen::MatrixXcd gram;
    if (m.rows() <= m.cols()) {
        gram.noalias() = m * m.adjoint();
    } else {
        gram.noalias() = m.adjoint() * m;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
    Eigen::VectorXd vals = solver.eigenvalues();
    std::sort(vals.data(), vals.data() + vals.size(), std::greater<double>());
    return vals;
}

double reduction_purity(const MultipartiteState& psi, const std::vector<std::string>& keep) {
    const auto sel = positions_of(psi.labels(), keep);
    const auto rest = complement_positions(psi.labels().size(), sel);
    const Eigen::MatrixXcd m = bipartition_matrix(psi, sel, rest);
    Eigen::MatrixXcd gram;
    if (m.rows() <= m.cols()) {
        gram.noalias() = m * m.adjoint();
    } else {
        gram.noalias() = m.adjoint() * m;
    }
    // tr[rho^2] = ||gram||_F^2; the two Gram orderings share their spectrum.
    return gram.squaredNorm();
}

MultipartiteState apply_unitary(const MultipartiteState& psi, const std::vector<std::string>& targets,
                                const Unitary& u) {
    const auto pos = positions_of(psi.labels(), targets);
    require_contiguous(pos, "apply_unitary");
    std::size_t block = 1;
    for (std::size_t p : pos) block *= psi.labels()[p].dim;
    if (block != u.dim()) {
        throw std::invalid_argument("unitary dimension " + std::to_string(u.dim()) +
                                    " does not match target block dimension " + std::to_string(block));
    }
    std::size_t pre = 1, post = 1;
    for (std::size_t i = 0; i < pos.front(); ++i) pre *= psi.labels()[i].dim;
    for (std::size_t i = pos.back() + 1; i < psi.labels().size(); ++i) post *= psi.labels()[i].dim;

    Eigen::VectorXcd out(psi.dim());
    Eigen::VectorXcd scratch(block);
    const auto& amps = psi.amplitudes();
    for (std::size_t a = 0; a < pre; ++a) {
        for (std::size_t c = 0; c < post; ++c) {
            const std::size_t base = a * block * post + c;
            for (std::size_t m = 0; m < block; ++m) scratch(m) = amps(base + m * post);
            const Eigen::VectorXcd rotated = u.matrix() * scratch;
            for (std::size_t m = 0; m < block; ++m) out(base + m * post) = rotated(m);
        }
    }
    return MultipartiteState(psi.labels(), std::move(out));
}

MultipartiteState permute_subsystems(const MultipartiteState& psi, const std::vector<std::string>& order) {
    const auto sel = positions_of(psi.labels(), order);
    if (sel.size() != psi.labels().size()) {
        throw std::invalid_argument("permute_subsystems: order must list every label exactly once");
    }
    const auto strides = strides_of(psi.labels());
    const auto offsets = subset_offsets(psi.labels(), strides, sel);
    Eigen::VectorXcd amps(psi.dim());
    for (std::size_t c = 0; c < offsets.size(); ++c) {
        amps(c) = psi.amplitudes()(offsets[c]);
    }
    return MultipartiteState(pick_labels(psi.labels(), sel), std::move(amps));
}

MultipartiteState merge_labels(const MultipartiteState& psi, const std::vector<std::string>& names,
                               const std::string& merged_name) {
    const auto pos = positions_of(psi.labels(), names);
    require_contiguous(pos, "merge_labels");
    std::size_t dim = 1;
    for (std::size_t p : pos) dim *= psi.labels()[p].dim;
    std::vector<Subsystem> labels(psi.labels().begin(), psi.labels().begin() + pos.front());
    labels.push_back(Subsystem{merged_name, dim});
    labels.insert(labels.end(), psi.labels().begin() + pos.back() + 1, psi.labels().end());
    return MultipartiteState(std::move(labels), psi.amplitudes());
}

MultipartiteState split_label(const MultipartiteState& psi, std::string_view name,
                              const Subsystem& left, const Subsystem& right) {
    const std::size_t p = psi.label_index(name);
    if (left.dim * right.dim != psi.labels()[p].dim) {
        throw std::invalid_argument("split_label: " + std::to_string(left.dim) + " x " +
                                    std::to_string(right.dim) + " does not factor dimension " +
                                    std::to_string(psi.labels()[p].dim));
    }
    std::vector<Subsystem> labels(psi.labels().begin(), psi.labels().begin() + p);
    labels.push_back(left);
    labels.push_back(right);
    labels.insert(labels.end(), psi.labels().begin() + p + 1, psi.labels().end());
    return MultipartiteState(std::move(labels), psi.amplitudes());
}

MultipartiteState rename_label(const MultipartiteState& psi, std::string_view name,
                               const std::string& new_name) {
    std::vector<Subsystem> labels = psi.labels();
    labels[psi.label_index(name)].name = new_name;
    return MultipartiteState(std::move(labels), psi.amplitudes());
}

} // namespace evap
