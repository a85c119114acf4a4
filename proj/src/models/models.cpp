// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "evap/models/build.hpp"
#include "evap/models/ext_spectrum.hpp"

namespace evap {

namespace {

// Builders refuse to materialize amplitude vectors beyond this size.
constexpr std::size_t kBuilderDimCap = std::size_t{1} << 22;
// Dense Haar scrambling inside the cascade is impractical beyond this.
constexpr std::size_t kCascadeInteriorCap = std::size_t{1} << 12;

std::size_t pow2(unsigned e) { return std::size_t{1} << e; }

// Exact log2 of a power-of-two dimension.
unsigned log2_exact(std::size_t dim, const char* what) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument(std::string(what) + " dimension " + std::to_string(dim) +
                                    " is not a power of two");
    }
    unsigned e = 0;
    while ((std::size_t{1} << e) < dim) ++e;
    return e;
}

void check_builder_dim(std::size_t dim) {
    if (dim > kBuilderDimCap) {
        throw std::invalid_argument("requested state dimension " + std::to_string(dim) +
                                    " exceeds the builder cap " + std::to_string(kBuilderDimCap));
    }
}

EntropyLedger cascade_ledger(const MultipartiteState& psi) {
    EntropyLedger ledger;
    auto add = [&](const char* label, const char* set_name) {
        if (!psi.has(label)) return;
        const Eigen::VectorXd spectrum = reduction_spectrum(psi, {label});
        ledger.push_back(EntropyEntry{set_name, renyi_entropy(spectrum, 1.0), "eigensolve"});
    };
    add("ref", "ref");
    add("int", "B");
    add("R", "R");
    add("ext", "ext");
    return ledger;
}

} // namespace

ExtSpectrum ExtSpectrum::explicit_probs(std::vector<double> probabilities) {
    if (probabilities.empty()) {
        throw std::invalid_argument("ext spectrum requires at least one probability");
    }
    double sum = 0.0;
    for (double p : probabilities) {
        if (p < 0.0) {
            throw std::invalid_argument("ext spectrum probability " + std::to_string(p) +
                                        " is negative");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw std::invalid_argument("ext spectrum probabilities sum to " + std::to_string(sum) +
                                    ", not 1 within 1e-12");
    }
    ExtSpectrum s;
    s.uniform_ = false;
    s.probs_ = std::move(probabilities);
    s.log2_count_ = std::log2(static_cast<double>(s.probs_.size()));
    return s;
}

ExtSpectrum ExtSpectrum::uniform(double log2_count) {
    if (!(log2_count >= 0.0) || !std::isfinite(log2_count)) {
        throw std::invalid_argument("uniform ext spectrum requires log2_count >= 0");
    }
    ExtSpectrum s;
    s.uniform_ = true;
    s.log2_count_ = log2_count;
    return s;
}

double ExtSpectrum::log2_count() const { return log2_count_; }

std::size_t ExtSpectrum::count() const {
    if (!uniform_) return probs_.size();
    const double rounded = std::round(log2_count_);
    if (std::abs(log2_count_ - rounded) > 1e-9 || rounded > 40.0) {
        throw std::invalid_argument("uniform ext spectrum with log2_count " +
                                    std::to_string(log2_count_) +
                                    " has no materializable level count");
    }
    return pow2(static_cast<unsigned>(rounded));
}

std::vector<double> ExtSpectrum::probabilities() const {
    if (!uniform_) return probs_;
    const std::size_t n = count();
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

double ExtSpectrum::renyi_bits(double q) const {
    if (!(q > 0.0)) throw std::invalid_argument("Renyi order q must be positive");
    if (uniform_) return log2_count_;  // flat spectra have order-independent entropy
    Eigen::VectorXd spectrum = Eigen::Map<const Eigen::VectorXd>(probs_.data(), probs_.size());
    return renyi_entropy(spectrum, q);
}

MultipartiteState build_pure_model_state(unsigned k, unsigned n) {
    if (k > n) {
        throw std::invalid_argument("reference entanglement k = " + std::to_string(k) +
                                    " exceeds interior size n = " + std::to_string(n));
    }
    const std::size_t big_k = pow2(k);
    const std::size_t dim_int = pow2(n);
    check_builder_dim(big_k * dim_int);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(big_k * dim_int);
    const double amp = 1.0 / std::sqrt(static_cast<double>(big_k));
    for (std::size_t i = 0; i < big_k; ++i) {
        amps(i * dim_int + i) = amp;
    }
    return MultipartiteState({Subsystem{"ref", big_k}, Subsystem{"int", dim_int}}, std::move(amps));
}

MultipartiteState build_entangled_model_state(unsigned k, unsigned n, const ExtSpectrum& ext) {
    const std::size_t big_k = pow2(k);
    const std::size_t dim_int = pow2(n);
    const std::size_t big_n = ext.count();
    if (big_k * big_n > dim_int) {
        throw std::invalid_argument(
            "occupied interior levels K*N = " + std::to_string(big_k * big_n) +
            " exceed the interior dimension 2^n = " + std::to_string(dim_int) + " (deficit " +
            std::to_string(big_k * big_n - dim_int) + " levels)");
    }
    check_builder_dim(big_k * dim_int * big_n);
    const std::vector<double> probs = ext.probabilities();
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(big_k * dim_int * big_n);
    const double ref_amp = 1.0 / std::sqrt(static_cast<double>(big_k));
    for (std::size_t i = 0; i < big_k; ++i) {
        for (std::size_t j = 0; j < big_n; ++j) {
            const std::size_t interior = i * big_n + j;  // embedding of the occupied block
            amps((i * dim_int + interior) * big_n + j) = ref_amp * std::sqrt(probs[j]);
        }
    }
    return MultipartiteState(
        {Subsystem{"ref", big_k}, Subsystem{"int", dim_int}, Subsystem{"ext", big_n}},
        std::move(amps));
}

MultipartiteState build_uniform_entangled_state(unsigned log2_ent, unsigned n) {
    if (log2_ent > n) {
        throw std::invalid_argument("entanglement log2E = " + std::to_string(log2_ent) +
                                    " exceeds interior size n = " + std::to_string(n));
    }
    const std::size_t dim_int = pow2(n);
    const std::size_t e = pow2(log2_ent);
    check_builder_dim(dim_int * e);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim_int * e);
    const double amp = 1.0 / std::sqrt(static_cast<double>(e));
    for (std::size_t j = 0; j < e; ++j) {
        amps(j * e + j) = amp;
    }
    return MultipartiteState({Subsystem{"int", dim_int}, Subsystem{"ext", e}}, std::move(amps));
}

MultipartiteState evaporate(const MultipartiteState& psi, const Unitary& u, unsigned radiated) {
    const std::size_t dim_int = psi.label_dim("int");
    const unsigned n = log2_exact(dim_int, "interior");
    if (radiated > n) {
        throw std::invalid_argument("cannot radiate " + std::to_string(radiated) +
                                    " qubits from an interior of " + std::to_string(n));
    }
    if (u.dim() != dim_int) {
        throw std::invalid_argument("unitary dimension " + std::to_string(u.dim()) +
                                    " does not match interior dimension " + std::to_string(dim_int));
    }
    const MultipartiteState scrambled = apply_unitary(psi, {"int"}, u);
    return split_label(scrambled, "int", Subsystem{"B", pow2(n - radiated)},
                       Subsystem{"R", pow2(radiated)});
}

MultipartiteState add_entangled_matter(const MultipartiteState& psi, unsigned qubits) {
    if (qubits == 0) return psi;
    const std::size_t q = pow2(qubits);
    check_builder_dim(psi.dim() * q * q);
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(q * q);
    const double amp = 1.0 / std::sqrt(static_cast<double>(q));
    for (std::size_t a = 0; a < q; ++a) amps(a * q + a) = amp;
    const MultipartiteState matter({Subsystem{"mref", q}, Subsystem{"mint", q}}, std::move(amps));

    MultipartiteState joint = tensor(psi, matter);
    // Bring the fresh registers next to their targets, then fuse.
    std::vector<std::string> order;
    if (joint.has("ref")) order.push_back("ref");
    order.push_back("mref");
    for (const auto& l : psi.labels()) {
        if (l.name != "ref") order.push_back(l.name);
        if (l.name == "int") order.push_back("mint");
    }
    joint = permute_subsystems(joint, order);
    joint = merge_labels(joint, {"int", "mint"}, "int");
    if (joint.has("ref")) {
        joint = merge_labels(joint, {"ref", "mref"}, "ref");
    } else {
        joint = rename_label(joint, "mref", "ref");
    }
    return joint;
}

CascadeResult cascade_evaporate(const MultipartiteState& psi, unsigned steps, RandomStream& stream,
                                const CascadeOptions& options) {
    {
        const unsigned n = log2_exact(psi.label_dim("int"), "interior");
        const unsigned injected =
            options.injection ? options.injection->qubits : 0;
        if (steps > n + injected) {
            throw std::invalid_argument("cascade of " + std::to_string(steps) +
                                        " steps exceeds the interior size " +
                                        std::to_string(n + injected));
        }
        if (options.injection &&
            (options.injection->at_step < 1 || options.injection->at_step > steps)) {
            throw std::invalid_argument("matter injection step must lie in [1, steps]");
        }
    }
    MultipartiteState state = psi;
    CascadeResult result{{}, {}, state};
    if (options.keep_states) result.states.push_back(state);
    for (unsigned step = 1; step <= steps; ++step) {
        if (options.injection && options.injection->at_step == step) {
            state = add_entangled_matter(state, options.injection->qubits);
        }
        const std::size_t dim_int = state.label_dim("int");
        if (dim_int > kCascadeInteriorCap) {
            throw std::invalid_argument("interior dimension " + std::to_string(dim_int) +
                                        " exceeds the dense sampling cap");
        }
        const unsigned m = log2_exact(dim_int, "interior");
        if (m == 0) break;
        RandomStream sub = stream.substream(step);
        const Unitary u = haar_sample(dim_int, sub);
        state = apply_unitary(state, {"int"}, u);
        state = split_label(state, "int", Subsystem{"int", pow2(m - 1)}, Subsystem{"peel", 2});
        if (state.has("R")) {
            state = merge_labels(state, {"peel", "R"}, "R");
        } else {
            state = rename_label(state, "peel", "R");
        }
        CascadeStep record;
        record.step = step;
        record.radiated = log2_exact(state.label_dim("R"), "radiation");
        record.entropies = cascade_ledger(state);
        result.steps.push_back(std::move(record));
        if (options.keep_states) result.states.push_back(state);
    }
    result.final_state = steps == 0 ? state : rename_label(state, "int", "B");
    return result;
}

} // namespace evap
