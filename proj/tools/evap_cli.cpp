// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "evap/cli/config.hpp"
#include "evap/cli/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"evap: information flow in unitarily evaporating black-hole models"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    app.add_option("--config", config_path, "JSON scenario config")->required();
    std::uint64_t seed = 0;
    auto* seed_opt = app.add_option("--seed", seed, "override the config seed");
    std::size_t samples = 0;
    auto* samples_opt = app.add_option("--samples", samples, "override the sample count");
    std::string out_dir;
    auto* out_opt = app.add_option("--out", out_dir, "override the output directory");
    unsigned workers = 0;
    auto* workers_opt = app.add_option("--workers", workers, "override the worker count");
    std::string path_name;
    auto* path_opt =
        app.add_option("--path", path_name, "override the path: analytic or montecarlo");

    app.add_subcommand("curves", "emit the reference-correlation curves");
    app.add_subcommand("verify", "run the decoupling verification sweep");
    app.add_subcommand("thresholds", "emit the qubit-count threshold table");

    CLI11_PARSE(app, argc, argv);

    evap::CliOverrides overrides;
    if (*seed_opt) overrides.seed = seed;
    if (*samples_opt) overrides.samples = samples;
    if (*out_opt) overrides.out_dir = out_dir;
    if (*workers_opt) overrides.workers = workers;
    if (*path_opt) overrides.path = path_name;

    try {
        evap::ScenarioConfig config = evap::load_config(config_path);
        config = evap::apply_overrides(std::move(config), overrides);
        return evap::run_scenario(app.get_subcommands().front()->get_name(), config);
    } catch (const evap::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return evap::exit_code::kConfig;
    } catch (const std::length_error& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return evap::exit_code::kResourceCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return evap::exit_code::kConfig;
    }
}
