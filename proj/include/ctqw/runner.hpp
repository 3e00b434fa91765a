// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file runner.hpp
 * @brief Experiment drivers behind the command-line subcommands.
 *
 * Output files (all CSV with a header row, floats in shortest round-trip form):
 *   series.csv      t,entropy_bits,velocity,norm          (steps+1 rows)
 *   spacetime.csv   t,x=-N/2+1,...,x=N/2                  (steps+1 rows)
 *   sweep.csv       n,mass,dt,mean_entropy_bits,zb_amplitude,zb_frequency
 *   amplitudes.csv  dt,q,re,im,prob,prob_infinite
 *   depth.csv       n,depth,one_qubit,two_qubit
 * `t` is physical time, step·δt.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ctqw/circuit.hpp"
#include "ctqw/config.hpp"
#include "ctqw/observables.hpp"

namespace ctqw {

struct SeriesResult {
    std::vector<ObservableSample> samples;
    std::vector<std::vector<double>> spacetime;  // only when requested; rows in display-coordinate order

    [[nodiscard]] std::vector<double> entropy() const;
    [[nodiscard]] std::vector<double> velocity() const;
};

/// Streams the walk and records observables (and position rows if asked).
[[nodiscard]] SeriesResult compute_series(const InitialCondition& ic, const WalkParams& params,
                                          bool keep_spacetime = false);

/// Position probabilities reordered so column c holds display coordinate c − N/2 + 1.
[[nodiscard]] std::vector<double> display_ordered(std::span<const double> by_site);

/// Writes the series file (and the spacetime file when configured) under out_dir.
SeriesResult run_simulate(const RunConfig& cfg, const std::filesystem::path& out_dir);

struct SweepRow {
    std::size_t n_sites = 0;
    double mass = 0.0;
    double dt = 0.0;
    std::size_t steps = 0;
    double mean_entropy_bits = 0.0;
    ZbMetrics zb;
};

/// Computes one row per (N, m, δt) without touching the filesystem. Jobs run in parallel.
[[nodiscard]] std::vector<SweepRow> compute_sweep(const SweepConfig& cfg);

/// compute_sweep plus sweep.csv, sweep_meta.json and optional per-run series files.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const std::filesystem::path& out_dir);

/// δt ∈ {1, 3/4, 1/2, 1/4} at N = 64.
inline constexpr std::size_t kDefaultProfileSites = 64;
[[nodiscard]] std::vector<double> default_profile_dts();

void run_amplitudes(std::span<const double> dts, std::size_t n_sites, const std::filesystem::path& out_dir);

/// step.qasm for params.n_sites and depth.csv for N = 2, 4, ..., max_sites at params.dt and params.mass.
void run_circuit(const WalkParams& params, std::size_t max_sites, const std::filesystem::path& out_dir);

}  // namespace ctqw
