// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "ctqw/amplitudes.hpp"
#include "ctqw/circuit.hpp"
#include "ctqw/evolution.hpp"
#include "ctqw/kernels.hpp"
#include "ctqw/observables.hpp"

namespace ctqw {

namespace {

using Rng = std::mt19937_64;
constexpr std::uint64_t kSeed = 0x5eed'c7a1ULL;

SpinorField random_field(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(2 * n);
    for (auto& v : a) v = {g(rng), g(rng)};
    const double s = 1.0 / std::sqrt(kernels::serial::norm2(a));
    for (auto& v : a) v *= s;
    return SpinorField(n, std::move(a));
}

std::string fmt(const char* label, double measured, const char* cmp, double bound) {
    std::ostringstream o;
    o.precision(3);
    o << label << " = " << std::scientific << measured << " " << cmp << " " << bound;
    return o.str();
}

struct Outcome {
    bool passed;
    std::string detail;
};

Outcome amplitude_closed_form() {
    Rng rng(kSeed);
    std::uniform_real_distribution<double> dtd(0.0, 2.0);
    std::uniform_int_distribution<int> log_n(3, 8);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = std::size_t{1} << log_n(rng);
        const long half = static_cast<long>(n / 2);
        std::uniform_int_distribution<long> qd(-half, half);
        const double dt = 2.0 - dtd(rng);  // (0, 2]
        const long q = qd(rng);
        const auto sign = (i % 2) ? PhaseSign::Plus : PhaseSign::Minus;
        worst = std::max(worst, std::abs(transition_amplitude(q, dt, n, sign) -
                                         transition_amplitude_bruteforce(q, dt, n, sign)));
    }
    return {worst <= 1e-12, fmt("max |closed - sum|", worst, "<=", 1e-12)};
}

Outcome automaton_limit() {
    Rng rng(kSeed + 1);
    std::uniform_real_distribution<double> th(-std::numbers::pi, std::numbers::pi);
    double worst = 0.0;
    for (std::size_t n : {8, 32}) {
        for (int i = 0; i < 100; ++i) {
            const double theta = th(rng);
            const auto f = random_field(n, rng);
            const auto a = step(f, WalkParams{n, 1.0, theta, 1});
            const auto b = dca_step(f, theta);
            for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
        }
    }
    return {worst <= 1e-12, fmt("max |step - dca|", worst, "<=", 1e-12)};
}

Outcome fft_matches_naive() {
    Rng rng(kSeed + 2);
    std::normal_distribution<double> g;
    double worst = 0.0;
    for (std::size_t n = 2; n <= 1024; n *= 2) {
        std::vector<cplx> v(n);
        for (auto& x : v) x = {g(rng), g(rng)};
        const auto a = dft_forward(v);
        const auto b = dft_forward_naive(v);
        const auto c = dft_inverse(a);
        for (std::size_t k = 0; k < n; ++k) {
            worst = std::max({worst, std::abs(a[k] - b[k]), std::abs(c[k] - v[k])});
        }
    }
    return {worst <= 1e-10, fmt("max |fft - dft|", worst, "<=", 1e-10)};
}

Outcome strang_order() {
    const double dts[] = {0.2, 0.1, 0.05, 0.025};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double dt : dts) {
        const double x = std::log(dt);
        const double y = std::log(trotter_local_error(1.0, 1.0, dt));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    const bool commuting = trotter_local_error(0.7, 0.0, 0.3) < 1e-14 && trotter_local_error(0.0, 1.3, 0.3) < 1e-14;
    std::ostringstream o;
    o << "fitted exponent = " << slope << " in [2.7, 3.3]" << (commuting ? "" : "; commuting limits nonzero");
    return {slope >= 2.7 && slope <= 3.3 && commuting, o.str()};
}

Outcome entropy_identity() {
    Rng rng(kSeed + 3);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = std::size_t{2} << (i % 6);  // 2..64
        const auto f = random_field(n, rng);
        worst = std::max(worst, std::abs(entropy_bits(reduced_internal(f)) - entropy_bits(reduced_external(f))));
    }
    return {worst <= 1e-9, fmt("max |S(rho_c) - S(rho_x)|", worst, "<=", 1e-9)};
}

Outcome circuit_equivalence() {
    Rng rng(kSeed + 4);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    double worst = 0.0;
    for (std::size_t n : {8, 16}) {
        for (int i = 0; i < 3; ++i) {
            const WalkParams p{n, u(rng), u(rng), 1};
            const Eigen::MatrixXcd diff = circuit_unitary(build_step_circuit(p)) - StepOperator(p).dense();
            worst = std::max(worst, diff.cwiseAbs().maxCoeff());
        }
    }
    return {worst <= 1e-8, fmt("max |circuit - step|", worst, "<=", 1e-8)};
}

Outcome long_run_invariants() {
    const WalkParams p{256, 0.5, std::numbers::pi / 4.0, 1000};
    double worst_norm = 0.0;
    bool entropy_ok = true;
    bool velocity_ok = true;
    InitialCondition ic;
    evolve_streaming(ic, p, [&](std::size_t t, const SpinorField& f) {
        const auto s = observe(f, static_cast<double>(t) * p.dt);
        worst_norm = std::max(worst_norm, std::abs(s.norm - 1.0));
        entropy_ok = entropy_ok && s.entropy_bits >= 0.0 && s.entropy_bits <= 1.0 + 1e-9;
        velocity_ok = velocity_ok && std::abs(s.velocity) <= 1.0 + 1e-12;
    });
    std::string d = fmt("max |norm - 1| over 1000 steps", worst_norm, "<=", 1e-9);
    if (!entropy_ok) d += "; entropy left [0,1]";
    if (!velocity_ok) d += "; velocity left [-1,1]";
    return {worst_norm <= 1e-9 && entropy_ok && velocity_ok, d};
}

Outcome profile_rows() {
    const double dts[] = {1.0, 0.75, 0.5, 0.25, 1.3};
    double worst = 0.0;
    for (std::size_t n : {8, 64, 256}) {
        const auto prof = emit_profile(dts, n);
        for (double dt : dts) {
            double sum = 0.0;
            for (const auto& e : prof.entries) {
                if (e.dt == dt) sum += e.prob;
            }
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    return {worst <= 1e-10, fmt("max |row sum - 1|", worst, "<=", 1e-10)};
}

Outcome serial_matches_parallel() {
    Rng rng(kSeed + 5);
    const std::size_t n = kernels::kParallelMin * 2;
    const auto f = random_field(n, rng);
    std::vector<cplx> a(f.amps().begin(), f.amps().end());
    std::vector<cplx> b = a;
    const kernels::FftPlan plan(n);
    std::span<cplx> sa(a), sb(b);
    kernels::serial::fft(plan, sa.subspan(0, n), kernels::Direction::Forward);
    kernels::omp::fft(plan, sb.subspan(0, n), kernels::Direction::Forward);
    kernels::serial::apply_coin(sa.subspan(0, n), sa.subspan(n, n), 0.6, 0.8);
    kernels::omp::apply_coin(sb.subspan(0, n), sb.subspan(n, n), 0.6, 0.8);
    const bool same = a == b && kernels::serial::norm2(a) == kernels::omp::norm2(b) &&
                      kernels::serial::dot_conj(sa.subspan(0, n), sa.subspan(n, n)) ==
                          kernels::omp::dot_conj(sb.subspan(0, n), sb.subspan(n, n));
    return {same, same ? "bitwise identical" : "serial and OpenMP kernels differ"};
}

}  // namespace

std::vector<CheckResult> run_verification(const std::function<void(const CheckResult&)>& on_result) {
    struct Named {
        const char* name;
        Outcome (*fn)();
    };
    const Named checks[] = {
        {"amplitude closed form vs direct sum", amplitude_closed_form},
        {"step at dt=1 equals automaton update", automaton_limit},
        {"radix-2 transform vs direct DFT", fft_matches_naive},
        {"split-step local error order", strang_order},
        {"internal/external entropy identity", entropy_identity},
        {"step circuit unitary vs step operator", circuit_equivalence},
        {"norm, entropy and velocity bounds (N=256, 1000 steps)", long_run_invariants},
        {"amplitude profile rows sum to 1", profile_rows},
        {"serial and OpenMP kernels agree", serial_matches_parallel},
    };
    std::vector<CheckResult> results;
    for (const auto& c : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        CheckResult r{c.name, false, {}, 0.0};
        try {
            const auto out = c.fn();
            r.passed = out.passed;
            r.detail = out.detail;
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace ctqw
