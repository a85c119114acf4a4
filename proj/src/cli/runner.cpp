// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/cli/runner.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "evap/core/ops.hpp"
#include "evap/core/parallel.hpp"
#include "evap/core/rng.hpp"
#include "evap/core/spectral.hpp"
#include "evap/flow/decoupling.hpp"
#include "evap/flow/thresholds.hpp"
#include "evap/haar/purity.hpp"
#include "evap/models/build.hpp"

namespace evap {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Locale-free shortest-width formatting at 12 significant digits.
std::string format_number(double v) {
    std::array<char, 40> buf{};
    const auto res =
        std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

json ext_echo(const ExtSpectrum& ext) {
    json obj;
    if (ext.is_uniform()) {
        obj["kind"] = "uniform";
        obj["log2_count"] = ext.log2_count();
    } else {
        obj["kind"] = "explicit";
        obj["probabilities"] = ext.probabilities();
    }
    return obj;
}

const char* model_name(ModelKind model) {
    switch (model) {
        case ModelKind::Pure: return "pure";
        case ModelKind::Entangled: return "entangled";
        case ModelKind::Uniform: return "uniform";
    }
    return "unknown";
}

// Workers and the output directory are deliberately not echoed: artifacts
// must be byte-identical wherever and however parallel they were produced,
// so the echo carries only result-shaping fields.
json config_echo(const ScenarioConfig& config) {
    json obj;
    obj["model"] = model_name(config.model);
    obj["k"] = config.k;
    obj["n"] = config.n;
    obj["ext"] = ext_echo(config.ext);
    obj["path"] = config.path == CurvePath::Analytic ? "analytic" : "montecarlo";
    obj["samples"] = config.samples;
    obj["seed"] = config.seed;
    obj["c"] = config.c;
    obj["q"] = config.q_list;
    return obj;
}

json warnings_json(const Warnings& warnings) {
    json arr = json::array();
    for (const auto& w : warnings) {
        arr.push_back(json{{"code", w.code}, {"message", w.message}});
    }
    return arr;
}

void matter_advisory(const ScenarioConfig& config, Warnings& warnings) {
    const double limit = std::pow(config.n, 0.75);
    if (config.k > limit) {
        std::ostringstream msg;
        msg << "matter entropy k = " << config.k << " exceeds n^(3/4) = " << limit
            << "; the model assumes matter entropy well below the interior scale";
        warnings.push_back(Warning{warning_code::kMatterEntropyAdvisory, msg.str()});
    }
}

std::string write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    return path.string();
}

std::string write_report(const fs::path& dir, const json& report) {
    return write_text(dir / "report.json", report.dump(2) + "\n");
}

unsigned integral_bits(double value, const char* field) {
    const double rounded = std::round(value);
    if (std::abs(value - rounded) > 1e-9 || rounded < 0.0 || rounded > 40.0) {
        throw ConfigError("field '" + std::string(field) +
                          "': sampling requires a small nonnegative integer, got " +
                          std::to_string(value));
    }
    return static_cast<unsigned>(rounded);
}

} // namespace

RunOutcome run_curves(const ScenarioConfig& config) {
    validate_config(config);
    CurveConfig cc;
    cc.k = config.k;
    cc.n = config.n;
    cc.ext = config.ext;
    cc.path = config.path;
    cc.samples = config.samples;
    cc.seed = config.seed;
    cc.workers = resolve_workers(config.workers);
    const CurveResult curves = correlation_curves(cc);

    RunOutcome out;
    out.warnings = curves.warnings;
    matter_advisory(config, out.warnings);

    fs::create_directories(config.out_dir);
    std::ostringstream csv;
    csv << "r,c_ref_B,c_ref_Rext,c_ref_Bext,c_ref_R,sum_ab_residual,sum_cd_residual\n";
    json table = json::array();
    for (const CurvePoint& p : curves.points) {
        csv << p.r << ',' << format_number(p.c_ref_b) << ',' << format_number(p.c_ref_rext)
            << ',' << format_number(p.c_ref_bext) << ',' << format_number(p.c_ref_r) << ','
            << format_number(p.residual_ab) << ',' << format_number(p.residual_cd) << '\n';
        table.push_back(json{{"r", p.r},
                             {"c_ref_B", p.c_ref_b},
                             {"c_ref_Rext", p.c_ref_rext},
                             {"c_ref_Bext", p.c_ref_bext},
                             {"c_ref_R", p.c_ref_r},
                             {"sum_ab_residual", p.residual_ab},
                             {"sum_cd_residual", p.residual_cd}});
    }
    out.files.push_back(write_text(fs::path(config.out_dir) / "curves.csv", csv.str()));

    json report;
    report["command"] = "curves";
    report["config"] = config_echo(config);
    report["curve"] = std::move(table);
    report["warnings"] = warnings_json(out.warnings);
    report["artifacts"] = json::array({"curves.csv"});
    out.files.push_back(write_report(config.out_dir, report));
    return out;
}

RunOutcome run_thresholds(const ScenarioConfig& config) {
    validate_config(config);
    const ChiProfile chi_half = chi(0.5, config.n, config.k, config.ext);
    const ChiProfile chi_two = chi(2.0, config.n, config.k, config.ext);
    const ThresholdParams params{config.k, config.n, chi_half.value, chi_two.value, config.c};
    const ThresholdReport table = thresholds(params);

    RunOutcome out;
    out.warnings = table.warnings;
    matter_advisory(config, out.warnings);

    json entries = json::array();
    for (const ThresholdEntry* e :
         {&table.pure_retention, &table.pure_release_further, &table.entangled_window_count,
          &table.entangled_early_retention, &table.ext_transfer}) {
        entries.push_back(json{{"name", e->name},
                               {"qubits", e->qubits},
                               {"raw", e->raw},
                               {"clamped", e->clamped}});
    }
    json deficits = json::array();
    for (double q : config.q_list) {
        const ChiProfile profile = chi(q, config.n, config.k, config.ext);
        deficits.push_back(json{{"q", profile.q}, {"chi", profile.value}});
    }

    json report;
    report["command"] = "thresholds";
    report["config"] = config_echo(config);
    report["thresholds"] = std::move(entries);
    report["window_width"] = table.window_width;
    report["chi"] = std::move(deficits);
    report["warnings"] = warnings_json(out.warnings);
    report["artifacts"] = json::array();

    fs::create_directories(config.out_dir);
    out.files.push_back(write_report(config.out_dir, report));
    return out;
}

RunOutcome run_verify(const ScenarioConfig& config) {
    validate_config(config);
    const unsigned n = integral_bits(config.n, "n");
    const unsigned k = integral_bits(config.k, "k");

    MultipartiteState base = [&] {
        switch (config.model) {
            case ModelKind::Pure: return build_pure_model_state(k, n);
            case ModelKind::Uniform:
                return build_uniform_entangled_state(
                    integral_bits(config.ext.log2_count(), "ext.log2_count"), n);
            case ModelKind::Entangled: default:
                return build_entangled_model_state(k, n, config.ext);
        }
    }();
    DecouplingPartition roles;
    roles.y1 = {"R"};
    roles.y2 = {"B"};
    if (config.model == ModelKind::Uniform) {
        roles.x = {"ext"};
    } else {
        roles.x = {"ref"};
        if (config.model == ModelKind::Entangled) roles.z = {"ext"};
    }

    const RandomStream root(config.seed);
    const unsigned workers = resolve_workers(config.workers);
    const std::size_t dim_int = std::size_t{1} << n;

    RunOutcome out;
    std::ostringstream csv;
    csv << "r,lhs_mean,lhs_std_error,rhs_step1,rhs_step2,rhs_step3,special_bound,"
           "fidelity_floor_paper,fidelity_floor_trace,pass\n";
    json rows = json::array();
    bool all_pass = true;
    for (unsigned r = 0; r <= n; ++r) {
        const MultipartiteState split =
            split_label(base, "int", Subsystem{"B", dim_int >> r},
                        Subsystem{"R", std::size_t{1} << r});
        const Estimate lhs = decoupling_lhs(split, roles, config.samples, root.substream(r),
                                            workers);
        const DecouplingInputs inputs = decoupling_inputs(split, roles);
        const double rhs1 = decoupling_rhs(inputs, 0.5, 0.5, BoundLevel::Full);
        auto try_level = [&](BoundLevel level, const char* name) -> std::optional<double> {
            try {
                return decoupling_rhs(inputs, 0.5, 0.5, level);
            } catch (const std::domain_error& e) {
                std::ostringstream msg;
                msg << "r=" << r << " " << name << ": " << e.what();
                out.warnings.push_back(Warning{warning_code::kHypothesisFailure, msg.str()});
                return std::nullopt;
            }
        };
        const std::optional<double> rhs2 = try_level(BoundLevel::Product, "step2");
        const std::optional<double> rhs3 = try_level(BoundLevel::PureRenyiHalf, "step3");

        const double h_x = renyi_entropy(inputs.rho_x, 0.5);
        const double h_z = renyi_entropy(inputs.rho_z, 0.5);
        const double special = ext_decoupling_bound(h_x + h_z, inputs.dim_y1, inputs.dim_y2);
        const double floor_paper = fidelity_floor_from_bound(special * special);
        const double floor_trace = fidelity_floor_from_trace_norm(special);
        const bool pass = lhs.mean - 3.0 * lhs.std_error <= std::sqrt(rhs1) + 1e-12;
        all_pass = all_pass && pass;

        csv << r << ',' << format_number(lhs.mean) << ',' << format_number(lhs.std_error) << ','
            << format_number(rhs1) << ',' << (rhs2 ? format_number(*rhs2) : "") << ','
            << (rhs3 ? format_number(*rhs3) : "") << ',' << format_number(special) << ','
            << format_number(floor_paper) << ',' << format_number(floor_trace) << ','
            << (pass ? 1 : 0) << '\n';
        json row{{"r", r},
                 {"lhs_mean", lhs.mean},
                 {"lhs_std_error", lhs.std_error},
                 {"rhs_step1", rhs1},
                 {"special_bound", special},
                 {"fidelity_floor_paper", floor_paper},
                 {"fidelity_floor_trace", floor_trace},
                 {"pass", pass}};
        if (rhs2) row["rhs_step2"] = *rhs2;
        if (rhs3) row["rhs_step3"] = *rhs3;
        rows.push_back(std::move(row));
    }
    matter_advisory(config, out.warnings);

    fs::create_directories(config.out_dir);
    out.files.push_back(write_text(fs::path(config.out_dir) / "verify.csv", csv.str()));
    json report;
    report["command"] = "verify";
    report["config"] = config_echo(config);
    report["bounds"] = std::move(rows);
    report["warnings"] = warnings_json(out.warnings);
    report["artifacts"] = json::array({"verify.csv"});
    out.files.push_back(write_report(config.out_dir, report));
    out.exit = all_pass ? exit_code::kOk : exit_code::kVerificationFailure;
    return out;
}

int run_scenario(const std::string& command, const ScenarioConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    try {
        RunOutcome out;
        if (command == "curves") {
            out = run_curves(config);
        } else if (command == "verify") {
            out = run_verify(config);
        } else if (command == "thresholds") {
            out = run_thresholds(config);
        } else {
            throw ConfigError("unknown command '" + command + "'");
        }
        for (const auto& w : out.warnings) {
            std::cerr << "[" << w.code << "] " << w.message << "\n";
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        // Timing is informational only; artifacts must stay byte-identical.
        std::cerr << command << " wrote " << out.files.size() << " file(s) in " << elapsed.count()
                  << " s\n";
        return out.exit;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_code::kConfig;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return exit_code::kResourceCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return exit_code::kConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code::kConfig;
    }
}

} // namespace evap
