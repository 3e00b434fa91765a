// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file config.hpp
 * @brief JSON run/sweep configuration.
 *
 * One document schema, discriminated by "mode":
 *
 *   {
 *     "mode": "simulate",
 *     "n_sites": 64, "dt": 1, "mass": "pi/4", "steps": 64,
 *     "initial": {"spin": [[1, 0], [0, 0]], "position": {"site": 0}},
 *     "outputs": {"series_path": "series.csv", "spacetime_path": "spacetime.csv",
 *                 "transient_skip": 6}
 *   }
 *
 *   {
 *     "mode": "sweep",
 *     "n_sites": [32, 64, 128], "mass": ["pi/4", "pi/8"], "dt": [1],
 *     "steps": null,                       // null or absent: T = N per run
 *     "initial": {...}, "transient_skip": null,
 *     "outputs": {"sweep_path": "sweep.csv", "series_dir": "runs"}
 *   }
 *
 * Real-valued fields accept numbers or expressions such as "pi/4" or "1/2".
 * A gaussian position is {"gaussian": {"center": 0, "sigma": 2}}.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ctqw/evolution.hpp"
#include "ctqw/state.hpp"

namespace ctqw {

/// Schema or value error; the message starts with the offending field path.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunOutputs {
    std::string series_path = "series.csv";
    std::optional<std::string> spacetime_path;
    std::optional<std::size_t> transient_skip;
};

struct RunConfig {
    WalkParams params;
    InitialCondition initial;
    RunOutputs outputs;
};

inline constexpr std::size_t kMaxSweepRuns = 10000;

struct SweepConfig {
    std::vector<std::size_t> n_sites;
    std::vector<double> mass;
    std::vector<double> dt;
    std::optional<std::size_t> steps;  // nullopt: T = N for each run
    InitialCondition initial;
    std::optional<std::size_t> transient_skip;
    std::string sweep_path = "sweep.csv";
    std::optional<std::string> series_dir;  // per-run series files when set

    [[nodiscard]] std::size_t run_count() const noexcept { return n_sites.size() * mass.size() * dt.size(); }
};

using Config = std::variant<RunConfig, SweepConfig>;

[[nodiscard]] RunConfig parse_run_config(const nlohmann::json& doc);
[[nodiscard]] SweepConfig parse_sweep_config(const nlohmann::json& doc);
[[nodiscard]] Config parse_config(const nlohmann::json& doc);

/// Reads and parses a file. Throws IoError if unreadable, ConfigError on bad JSON or schema.
[[nodiscard]] Config load_config(const std::filesystem::path& path);

/// Sweep defaults: N ∈ {32, 64, 128}, m ∈ {π/4, π/8}, δt = 1, T = N, |0⟩⊗|x=0⟩.
[[nodiscard]] SweepConfig default_sweep_config();

[[nodiscard]] nlohmann::json to_json(const InitialCondition& ic);

}  // namespace ctqw
