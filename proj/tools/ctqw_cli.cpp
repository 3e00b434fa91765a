// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

// ctqw: command-line runner for the continuous-time Dirac walk.
//
//   ctqw simulate   --config run.json   [--out-dir DIR]
//   ctqw sweep      [--config sweep.json] [--out-dir DIR]
//   ctqw amplitudes [--n 64] [--dt 1 --dt 1/2 ...] [--out-dir DIR]
//   ctqw circuit    [--n 16] [--dt 1] [--mass 0] [--max-n 1024] [--out-dir DIR]
//   ctqw verify
//
// Exit codes: 0 success, 2 config error, 3 I/O error, 4 verification failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "ctqw/config.hpp"
#include "ctqw/csv.hpp"
#include "ctqw/parse.hpp"
#include "ctqw/runner.hpp"
#include "ctqw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitVerify = 4;

double real_flag(const std::string& text, const char* flag) {
    try {
        return ctqw::parse_real(text);
    } catch (const std::invalid_argument& e) {
        throw ctqw::ConfigError(std::string(flag) + ": " + e.what());
    }
}

ctqw::WalkParams circuit_params(std::size_t n, const std::string& dt, const std::string& mass) {
    ctqw::WalkParams p{n, real_flag(dt, "--dt"), real_flag(mass, "--mass"), 1};
    try {
        ctqw::validate(p);
    } catch (const std::invalid_argument& e) {
        throw ctqw::ConfigError(e.what());
    }
    return p;
}

int do_verify() {
    int failed = 0;
    const auto results = ctqw::run_verification([&](const ctqw::CheckResult& r) {
        std::printf("[%s] %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
        std::fflush(stdout);
        failed += r.passed ? 0 : 1;
    });
    std::printf("%zu checks, %d failed\n", results.size(), failed);
    return failed ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum walk simulator for 1D Dirac dynamics"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    std::string out_dir = ".";
    unsigned long long seed = 0;
    app.add_option("--seed", seed, "Reserved; the engine is deterministic and ignores it");

    auto* simulate = app.add_subcommand("simulate", "Single run: series.csv and optional spacetime.csv");
    simulate->add_option("--config", config_path, "JSON run configuration")->required();
    simulate->add_option("--out-dir", out_dir, "Output directory");

    auto* sweep = app.add_subcommand("sweep", "Parameter sweep: sweep.csv (defaults reproduce the N/mass study)");
    sweep->add_option("--config", config_path, "JSON sweep configuration");
    sweep->add_option("--out-dir", out_dir, "Output directory");

    std::size_t amp_sites = ctqw::kDefaultProfileSites;
    std::vector<std::string> amp_dts;
    auto* amplitudes = app.add_subcommand("amplitudes", "Hopping-amplitude profile: amplitudes.csv");
    amplitudes->add_option("--n", amp_sites, "Lattice size (power of two)");
    amplitudes->add_option("--dt", amp_dts, "Time interval(s); repeatable, accepts 1/2 or pi/4 forms");
    amplitudes->add_option("--out-dir", out_dir, "Output directory");

    std::size_t circ_sites = 16;
    std::size_t circ_max = 1024;
    std::string circ_dt = "1";
    std::string circ_mass = "0";
    auto* circuit = app.add_subcommand("circuit", "Step circuit: step.qasm and depth.csv");
    circuit->add_option("--n", circ_sites, "Lattice size of the exported circuit");
    circuit->add_option("--dt", circ_dt, "Time interval");
    circuit->add_option("--mass", circ_mass, "Mass (coin angle is mass*dt)");
    circuit->add_option("--max-n", circ_max, "Largest lattice in depth.csv");
    circuit->add_option("--out-dir", out_dir, "Output directory");

    auto* verify = app.add_subcommand("verify", "Run the oracle and invariant self-checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*simulate) {
            const auto cfg = ctqw::load_config(config_path);
            const auto* run = std::get_if<ctqw::RunConfig>(&cfg);
            if (!run) throw ctqw::ConfigError("mode: simulate needs a \"simulate\" configuration");
            const auto res = ctqw::run_simulate(*run, out_dir);
            const auto vel = res.velocity();
            const std::size_t skip = run->outputs.transient_skip.value_or(ctqw::default_transient_skip(vel.size()));
            if (skip < vel.size() && vel.size() - skip >= 8) {
                const auto ent = res.entropy();
                const auto zb = ctqw::zb_metrics(vel, skip);
                double mean = 0.0;
                for (std::size_t t = skip; t < ent.size(); ++t) mean += ent[t];
                mean /= static_cast<double>(ent.size() - skip);
                std::printf("steps=%zu  mean_entropy=%.6f  zb_amplitude=%.6f  zb_frequency=%.6f\n", run->params.steps, mean,
                            zb.amplitude, zb.dominant_frequency);
            }
        } else if (*sweep) {
            ctqw::SweepConfig cfg = ctqw::default_sweep_config();
            if (!config_path.empty()) {
                const auto loaded = ctqw::load_config(config_path);
                const auto* s = std::get_if<ctqw::SweepConfig>(&loaded);
                if (!s) throw ctqw::ConfigError("mode: sweep needs a \"sweep\" configuration");
                cfg = *s;
            }
            const auto rows = ctqw::run_sweep(cfg, out_dir);
            for (const auto& r : rows) {
                std::printf("N=%zu mass=%.6g dt=%.6g  mean_entropy=%.6f  zb_amplitude=%.6f  zb_frequency=%.6f\n",
                            r.n_sites, r.mass, r.dt, r.mean_entropy_bits, r.zb.amplitude, r.zb.dominant_frequency);
            }
        } else if (*amplitudes) {
            std::vector<double> dts;
            for (const auto& s : amp_dts) dts.push_back(real_flag(s, "--dt"));
            if (dts.empty()) dts = ctqw::default_profile_dts();
            if (amp_sites < 2 || !ctqw::is_power_of_two(amp_sites)) {
                throw ctqw::ConfigError("--n: n_sites must be a power of two");
            }
            ctqw::run_amplitudes(dts, amp_sites, out_dir);
        } else if (*circuit) {
            if (circ_max < 2 || !ctqw::is_power_of_two(circ_max)) {
                throw ctqw::ConfigError("--max-n: must be a power of two");
            }
            ctqw::run_circuit(circuit_params(circ_sites, circ_dt, circ_mass), circ_max, out_dir);
        } else if (*verify) {
            return do_verify();
        }
    } catch (const ctqw::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ctqw::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
