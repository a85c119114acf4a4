// Copyright 2026 The evap developers
// SPDX-License-Identifier: Apache-2.0

#include "evap/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

namespace evap {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
    throw ConfigError("field '" + field + "': " + why);
}

void require_known_keys(const json& obj, const std::set<std::string>& known,
                        const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key())) {
            fail(where.empty() ? it.key() : where + "." + it.key(), "unknown field");
        }
    }
}

double number_field(const json& obj, const std::string& name, double fallback) {
    if (!obj.contains(name)) return fallback;
    if (!obj[name].is_number()) fail(name, "must be a number");
    return obj[name].get<double>();
}

std::uint64_t unsigned_field(const json& obj, const std::string& name, std::uint64_t fallback) {
    if (!obj.contains(name)) return fallback;
    if (!obj[name].is_number_unsigned()) fail(name, "must be a nonnegative integer");
    return obj[name].get<std::uint64_t>();
}

std::string string_field(const json& obj, const std::string& name, const std::string& fallback) {
    if (!obj.contains(name)) return fallback;
    if (!obj[name].is_string()) fail(name, "must be a string");
    return obj[name].get<std::string>();
}

ExtSpectrum parse_ext(const json& obj, double k, double n) {
    require_known_keys(obj, {"kind", "log2_count", "probabilities"}, "ext");
    const std::string kind = string_field(obj, "kind", "");
    if (kind == "uniform") {
        if (!obj.contains("log2_count")) fail("ext.log2_count", "required for a uniform spectrum");
        if (!obj["log2_count"].is_number()) fail("ext.log2_count", "must be a number");
        return ExtSpectrum::uniform(obj["log2_count"].get<double>());
    }
    if (kind == "explicit") {
        if (!obj.contains("probabilities") || !obj["probabilities"].is_array()) {
            fail("ext.probabilities", "required array for an explicit spectrum");
        }
        std::vector<double> probs;
        for (const auto& v : obj["probabilities"]) {
            if (!v.is_number()) fail("ext.probabilities", "entries must be numbers");
            probs.push_back(v.get<double>());
        }
        return ExtSpectrum::explicit_probs(std::move(probs));
    }
    if (kind == "chi0") {
        // Flat spectrum saturating the interior: zero information deficit.
        if (n - k < 0.0) fail("ext", "chi0 requires k <= n");
        return ExtSpectrum::uniform(n - k);
    }
    fail("ext.kind", "must be one of 'uniform', 'explicit', 'chi0'");
}

bool integral(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

} // namespace

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file '" + path + "' cannot be read");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");
    require_known_keys(
        doc, {"model", "k", "n", "ext", "path", "samples", "seed", "c", "q", "out", "workers"},
        "");

    ScenarioConfig config;
    const std::string model = string_field(doc, "model", "");
    if (model == "pure") {
        config.model = ModelKind::Pure;
    } else if (model == "entangled") {
        config.model = ModelKind::Entangled;
    } else if (model == "uniform") {
        config.model = ModelKind::Uniform;
    } else {
        fail("model", "must be one of 'pure', 'entangled', 'uniform'");
    }

    if (!doc.contains("n")) fail("n", "required");
    config.n = number_field(doc, "n", 0.0);
    config.k = number_field(doc, "k", 0.0);

    if (doc.contains("ext")) {
        if (config.model == ModelKind::Pure) {
            fail("ext", "the pure model carries no trans-horizon spectrum");
        }
        if (!doc["ext"].is_object()) fail("ext", "must be an object");
        config.ext = parse_ext(doc["ext"], config.k, config.n);
    } else if (config.model != ModelKind::Pure) {
        fail("ext", "required for the entangled and uniform models");
    }

    const std::string path_name = string_field(doc, "path", "analytic");
    if (path_name == "analytic") {
        config.path = CurvePath::Analytic;
    } else if (path_name == "montecarlo") {
        config.path = CurvePath::MonteCarlo;
    } else {
        fail("path", "must be 'analytic' or 'montecarlo'");
    }

    config.samples = static_cast<std::size_t>(unsigned_field(doc, "samples", 1000));
    config.seed = unsigned_field(doc, "seed", 1);
    config.c = number_field(doc, "c", 1.0);
    if (doc.contains("q")) {
        if (!doc["q"].is_array()) fail("q", "must be an array of Renyi orders");
        config.q_list.clear();
        for (const auto& v : doc["q"]) {
            if (!v.is_number()) fail("q", "entries must be numbers");
            config.q_list.push_back(v.get<double>());
        }
    }
    config.out_dir = string_field(doc, "out", "out");
    if (doc.contains("workers")) {
        config.workers = static_cast<unsigned>(unsigned_field(doc, "workers", 1));
    }

    validate_config(config);
    return config;
}

void validate_config(const ScenarioConfig& config) {
    if (!std::isfinite(config.n) || config.n < 0.0) fail("n", "must be a nonnegative number");
    if (!std::isfinite(config.k) || config.k < 0.0) fail("k", "must be a nonnegative number");
    if (config.k > config.n + 1e-9) fail("k", "cannot exceed n");
    if (!(config.c > 0.0)) fail("c", "must be positive");
    if (config.samples < 1) fail("samples", "must be at least 1");
    if (config.out_dir.empty()) fail("out", "must name an output directory");
    if (config.q_list.empty()) fail("q", "must list at least one Renyi order");
    for (double q : config.q_list) {
        if (!(q > 0.0)) fail("q", "Renyi orders must be positive");
    }
    if (config.workers && *config.workers < 1) fail("workers", "must be at least 1");

    switch (config.model) {
        case ModelKind::Pure:
            if (config.ext.log2_count() != 0.0) {
                fail("ext", "the pure model carries no trans-horizon spectrum");
            }
            break;
        case ModelKind::Uniform:
            if (config.k != 0.0) fail("k", "the uniform model has no reference register");
            if (!config.ext.is_uniform()) {
                fail("ext", "the uniform model requires a uniform spectrum");
            }
            if (config.ext.log2_count() > config.n + 1e-9) {
                fail("ext", "log2_count cannot exceed n");
            }
            break;
        case ModelKind::Entangled:
            if (config.ext.is_uniform() &&
                config.k + config.ext.log2_count() > config.n + 1e-9) {
                fail("ext", "k + log2_count cannot exceed n");
            }
            break;
    }

    if (config.path == CurvePath::MonteCarlo) {
        if (!integral(config.n) || !integral(config.k)) {
            fail("path", "the Monte Carlo path requires integer k and n");
        }
        const double log2_dim = config.k + config.n + config.ext.log2_count();
        if (log2_dim > std::log2(static_cast<double>(kStateDimCap)) + 1e-9) {
            throw std::length_error("Monte Carlo state dimension 2^" +
                                    std::to_string(log2_dim) + " exceeds the sampling cap " +
                                    std::to_string(kStateDimCap) +
                                    "; use the analytic path for large dimensions");
        }
    }
}

ScenarioConfig apply_overrides(ScenarioConfig config, const CliOverrides& overrides) {
    if (overrides.seed) config.seed = *overrides.seed;
    if (overrides.samples) config.samples = *overrides.samples;
    if (overrides.out_dir) config.out_dir = *overrides.out_dir;
    if (overrides.workers) config.workers = *overrides.workers;
    if (overrides.path) {
        if (*overrides.path == "analytic") {
            config.path = CurvePath::Analytic;
        } else if (*overrides.path == "montecarlo") {
            config.path = CurvePath::MonteCarlo;
        } else {
            fail("path", "must be 'analytic' or 'montecarlo'");
        }
    }
    validate_config(config);
    return config;
}

} // namespace evap
