// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/runner.hpp"

#include <exception>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ctqw/amplitudes.hpp"
#include "ctqw/csv.hpp"
#include "ctqw/parse.hpp"

namespace ctqw {

namespace fs = std::filesystem;

namespace {

fs::path prepare(const fs::path& out_dir, const std::string& rel) {
    const fs::path p = out_dir / rel;
    std::error_code ec;
    if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + p.parent_path().string() + "': " + ec.message());
    return p;
}

void write_series(const fs::path& path, std::span<const ObservableSample> samples) {
    CsvWriter w(path, {"t", "entropy_bits", "velocity", "norm"});
    for (const auto& s : samples) {
        w.write_row({format_shortest(s.time), format_shortest(s.entropy_bits), format_shortest(s.velocity),
                     format_shortest(s.norm)});
    }
    w.close();
}

std::vector<std::string> spacetime_header(std::size_t n) {
    std::vector<std::string> h{"t"};
    const long half = static_cast<long>(n / 2);
    for (long x = -half + 1; x <= half; ++x) h.push_back("x=" + std::to_string(x));
    return h;
}

double window_mean(std::span<const double> v, std::size_t skip) {
    double acc = 0.0;
    for (std::size_t i = skip; i < v.size(); ++i) acc += v[i];
    return acc / static_cast<double>(v.size() - skip);
}

}  // namespace

std::vector<double> SeriesResult::entropy() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.entropy_bits);
    return out;
}

std::vector<double> SeriesResult::velocity() const {
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& s : samples) out.push_back(s.velocity);
    return out;
}

std::vector<double> display_ordered(std::span<const double> by_site) {
    const std::size_t n = by_site.size();
    std::vector<double> out(n);
    // Column c ↔ display coordinate c − N/2 + 1 ↔ site (c + N/2 + 1) mod N.
    for (std::size_t c = 0; c < n; ++c) out[c] = by_site[(c + n / 2 + 1) % n];
    return out;
}

SeriesResult compute_series(const InitialCondition& ic, const WalkParams& params, bool keep_spacetime) {
    SeriesResult res;
    res.samples.reserve(params.steps + 1);
    evolve_streaming(ic, params, [&](std::size_t t, const SpinorField& f) {
        res.samples.push_back(observe(f, static_cast<double>(t) * params.dt));
        if (keep_spacetime) res.spacetime.push_back(display_ordered(position_distribution(f)));
    });
    return res;
}

SeriesResult run_simulate(const RunConfig& cfg, const fs::path& out_dir) {
    SeriesResult res = compute_series(cfg.initial, cfg.params, cfg.outputs.spacetime_path.has_value());
    write_series(prepare(out_dir, cfg.outputs.series_path), res.samples);
    if (cfg.outputs.spacetime_path) {
        CsvWriter w(prepare(out_dir, *cfg.outputs.spacetime_path), spacetime_header(cfg.params.n_sites));
        for (std::size_t t = 0; t < res.spacetime.size(); ++t) {
            std::vector<std::string> row{format_shortest(res.samples[t].time)};
            for (double p : res.spacetime[t]) row.push_back(format_shortest(p));
            w.write_row(row);
        }
        w.close();
    }
    return res;
}

namespace {

struct SweepJob {
    std::size_t n_sites;
    double mass;
    double dt;
};

std::vector<SweepJob> expand(const SweepConfig& cfg) {
    std::vector<SweepJob> jobs;
    jobs.reserve(cfg.run_count());
    for (auto n : cfg.n_sites)
        for (double m : cfg.mass)
            for (double dt : cfg.dt) jobs.push_back({n, m, dt});
    return jobs;
}

SweepRow run_job(const SweepConfig& cfg, const SweepJob& job, std::vector<ObservableSample>* keep) {
    WalkParams p{job.n_sites, job.dt, job.mass, cfg.steps.value_or(job.n_sites)};
    SeriesResult res = compute_series(cfg.initial, p);
    const auto ent = res.entropy();
    const auto vel = res.velocity();
    const std::size_t skip = cfg.transient_skip.value_or(default_transient_skip(vel.size()));
    SweepRow row{job.n_sites, job.mass, job.dt, p.steps, 0.0, zb_metrics(vel, skip)};
    row.mean_entropy_bits = window_mean(ent, skip);
    if (keep) *keep = std::move(res.samples);
    return row;
}

std::vector<SweepRow> sweep_impl(const SweepConfig& cfg, std::vector<std::vector<ObservableSample>>* series) {
    const auto jobs = expand(cfg);
    std::vector<SweepRow> rows(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    if (series) series->resize(jobs.size());
    const auto count = static_cast<long>(jobs.size());
    // Jobs are independent; the kernels inside each job stay on one thread.
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
            rows[k] = run_job(cfg, jobs[k], series ? &(*series)[k] : nullptr);
        } catch (...) {
            errors[k] = std::current_exception();
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return rows;
}

}  // namespace

std::vector<SweepRow> compute_sweep(const SweepConfig& cfg) { return sweep_impl(cfg, nullptr); }

std::vector<SweepRow> run_sweep(const SweepConfig& cfg, const fs::path& out_dir) {
    std::vector<std::vector<ObservableSample>> series;
    const auto rows = sweep_impl(cfg, cfg.series_dir ? &series : nullptr);

    CsvWriter w(prepare(out_dir, cfg.sweep_path), {"n", "mass", "dt", "mean_entropy_bits", "zb_amplitude", "zb_frequency"});
    for (const auto& r : rows) {
        w.write_row({std::to_string(r.n_sites), format_shortest(r.mass), format_shortest(r.dt),
                     format_shortest(r.mean_entropy_bits), format_shortest(r.zb.amplitude),
                     format_shortest(r.zb.dominant_frequency)});
    }
    w.close();

    nlohmann::json meta;
    meta["initial"] = to_json(cfg.initial);
    meta["steps"] = cfg.steps ? nlohmann::json(*cfg.steps) : nlohmann::json("n_sites");
    meta["transient_skip"] = cfg.transient_skip ? nlohmann::json(*cfg.transient_skip) : nlohmann::json("10%");
    meta["runs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        nlohmann::json run{{"n", rows[i].n_sites}, {"mass", rows[i].mass}, {"dt", rows[i].dt}, {"steps", rows[i].steps}};
        if (cfg.series_dir) {
            std::ostringstream name;
            name << "run_" << std::setw(4) << std::setfill('0') << i << ".csv";
            const fs::path rel = fs::path(*cfg.series_dir) / name.str();
            write_series(prepare(out_dir, rel.string()), series[i]);
            run["series"] = rel.generic_string();
        }
        meta["runs"].push_back(run);
    }
    const fs::path meta_path = prepare(out_dir, fs::path(cfg.sweep_path).replace_extension("").string() + "_meta.json");
    std::ofstream m(meta_path, std::ios::binary);
    if (!m) throw IoError("cannot open '" + meta_path.string() + "' for writing");
    m << meta.dump(2) << '\n';
    if (!m) throw IoError("write failed on '" + meta_path.string() + "'");
    return rows;
}

std::vector<double> default_profile_dts() { return {1.0, 0.75, 0.5, 0.25}; }

void run_amplitudes(std::span<const double> dts, std::size_t n_sites, const fs::path& out_dir) {
    const auto profile = emit_profile(dts, n_sites);
    CsvWriter w(prepare(out_dir, "amplitudes.csv"), {"dt", "q", "re", "im", "prob", "prob_infinite"});
    for (const auto& e : profile.entries) {
        w.write_row({format_shortest(e.dt), std::to_string(e.q), format_shortest(e.amplitude.real()),
                     format_shortest(e.amplitude.imag()), format_shortest(e.prob), format_shortest(e.prob_infinite)});
    }
    w.close();
}

void run_circuit(const WalkParams& params, std::size_t max_sites, const fs::path& out_dir) {
    validate(params);
    {
        const fs::path qasm_path = prepare(out_dir, "step.qasm");
        std::ofstream q(qasm_path, std::ios::binary);
        if (!q) throw IoError("cannot open '" + qasm_path.string() + "' for writing");
        q << export_qasm(build_step_circuit(params));
        if (!q) throw IoError("write failed on '" + qasm_path.string() + "'");
    }
    CsvWriter w(prepare(out_dir, "depth.csv"), {"n", "depth", "one_qubit", "two_qubit"});
    for (std::size_t n = 2; n <= max_sites; n *= 2) {
        WalkParams p = params;
        p.n_sites = n;
        const auto st = depth_and_counts(build_step_circuit(p));
        w.write_row({std::to_string(n), std::to_string(st.depth), std::to_string(st.one_qubit),
                     std::to_string(st.two_qubit)});
    }
    w.close();
}

}  // namespace ctqw
