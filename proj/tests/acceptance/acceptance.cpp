// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance        run all ten criteria
//   acceptance 7      run criterion 7 only
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "ctqw/amplitudes.hpp"
#include "ctqw/circuit.hpp"
#include "ctqw/evolution.hpp"
#include "ctqw/observables.hpp"
#include "ctqw/runner.hpp"
#include "ctqw/verify.hpp"

namespace {

using namespace ctqw;
using std::numbers::pi;
using Rng = std::mt19937_64;
using PositionVariant = decltype(InitialCondition::position);

struct Verdict {
    bool passed = true;
    std::ostringstream detail;

    // Records a sub-check; the first failing one leads the detail text.
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (passed) detail.str("");
            passed = false;
            detail << "FAILED " << what << "; ";
        } else if (passed) {
            detail << what << "; ";
        }
    }
};

std::string sci(double v) {
    std::ostringstream o;
    o.precision(3);
    o << std::scientific << v;
    return o.str();
}

std::string fix(double v, int digits = 4) {
    std::ostringstream o;
    o.precision(digits);
    o << std::fixed << v;
    return o.str();
}

// 1. Closed-form amplitude against the literal sum.
void amplitude_closed_form(Verdict& v) {
    Rng rng(101);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    std::uniform_int_distribution<int> lg(3, 8);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = std::size_t{1} << lg(rng);
        const long half = static_cast<long>(n / 2);
        const long q = std::uniform_int_distribution<long>(-half, half)(rng);
        const double dt = 2.0 - u(rng);
        const auto s = i % 2 ? PhaseSign::Minus : PhaseSign::Plus;
        worst = std::max(worst, std::abs(transition_amplitude(q, dt, n, s) - transition_amplitude_bruteforce(q, dt, n, s)));
    }
    v.expect(worst <= 1e-12, "max |closed - sum| = " + sci(worst) + " <= 1e-12 over 1000 draws");
}

// 2. Automaton limit and permutation structure of the integer-step translation.
void automaton_limit(Verdict& v) {
    Rng rng(202);
    std::uniform_real_distribution<double> th(-pi, pi);
    double worst = 0;
    for (std::size_t n : {8u, 32u}) {
        for (int i = 0; i < 100; ++i) {
            const double theta = th(rng);
            const auto f = oracle::random_field(n, rng);
            worst = std::max(worst, oracle::max_abs_diff(step(f, {n, 1.0, theta, 1}), dca_step(f, theta)));
        }
    }
    v.expect(worst <= 1e-12, "max |step - dca| = " + sci(worst) + " <= 1e-12");

    double perm = 0;
    for (std::size_t n : {8u, 32u}) {
        const Eigen::MatrixXcd u = StepOperator({n, 1.0, 0.0, 1}).dense();
        const auto k = static_cast<Eigen::Index>(n);
        perm = std::max(perm, (u.topLeftCorner(k, k) - oracle::shift_plus(n)).cwiseAbs().maxCoeff());
        perm = std::max(perm, (u.bottomRightCorner(k, k) - oracle::shift_minus(n)).cwiseAbs().maxCoeff());
    }
    v.expect(perm <= 1e-12, "translation vs shift permutations = " + sci(perm) + " <= 1e-12");
}

// 3. Large-lattice probabilities approach the infinite-lattice formula.
void infinite_limit(Verdict& v) {
    double worst = 0;
    for (long q = -8; q <= 8; ++q) {
        for (auto s : {PhaseSign::Plus, PhaseSign::Minus}) {
            worst = std::max(worst, std::abs(std::norm(transition_amplitude(q, 0.5, 4096, s)) - infinite_limit_prob(q, 0.5, s)));
        }
    }
    v.expect(worst <= 1e-4, "max |finite(4096) - infinite| = " + sci(worst) + " <= 1e-4 for q in [-8, 8]");
    v.expect(infinite_limit_prob(2, 2.0, PhaseSign::Plus) == 1.0 && infinite_limit_prob(-3, 3.0, PhaseSign::Minus) == 1.0,
             "limit value at zero offset is 1");
    const double a0 = std::norm(transition_amplitude(0, 0.5, 4096, PhaseSign::Plus));
    const double four_over_pi2 = 4.0 / (pi * pi);
    v.expect(std::abs(a0 - four_over_pi2) <= 1e-4, "|A_0|^2 = " + fix(a0, 6) + " vs 4/pi^2 within 1e-4");
}

// 4. Local split-step error is third order.
void strang_order(Verdict& v) {
    const double dts[] = {0.2, 0.1, 0.05, 0.025};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : dts) {
        const double x = std::log(h), y = std::log(trotter_local_error(1.0, 1.0, h));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double p = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    v.expect(p >= 2.7 && p <= 3.3, "fitted exponent " + fix(p) + " in [2.7, 3.3]");
    double commuting = 0;
    for (double h : dts) {
        for (double k : {-2.0, 0.5, 1.0, pi}) commuting = std::max(commuting, trotter_local_error(k, 0.0, h));
        for (double mu : {-1.0, 0.3, 1.0, 2.5}) commuting = std::max(commuting, trotter_local_error(0.0, mu, h));
    }
    v.expect(commuting < 1e-14, "commuting limits " + sci(commuting) + " < 1e-14");
}

// 5. Entropy of the two partial traces agree for pure states.
void entropy_identity(Verdict& v) {
    Rng rng(505);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = std::size_t{2} << (i % 6);
        const auto f = oracle::random_field(n, rng);
        worst = std::max(worst, std::abs(entropy_bits(reduced_internal(f)) - entropy_bits(reduced_external(f))));
    }
    v.expect(worst <= 1e-9, "max |S_c - S_x| = " + sci(worst) + " <= 1e-9 over 100 states");

    std::normal_distribution<double> g;
    double product = 0;
    for (int i = 0; i < 50; ++i) {
        const InitialCondition ic{{cplx(g(rng), g(rng)), cplx(g(rng), g(rng))},
                                  i % 2 ? PositionVariant{SitePosition{static_cast<std::size_t>(i % 16)}}
                                        : PositionVariant{GaussianPosition{g(rng), 1.0 + std::abs(g(rng))}}};
        const auto f = init_state(ic, 16);
        product = std::max({product, entropy_bits(reduced_internal(f)), entropy_bits(reduced_external(f))});
    }
    v.expect(product <= 1e-9, "product-state entropy " + sci(product) + " <= 1e-9");
    const double half = entropy_bits(Mat2(0.5 * Mat2::Identity()));
    v.expect(std::abs(half - 1.0) <= 1e-12, "S(I/2) - 1 = " + sci(half - 1.0));
}

// 6. Spacetime behaviour with and without mass.
void massless_vs_massive(Verdict& v) {
    const InitialCondition ic{};
    for (double dt : {1.0, 0.5}) {
        const std::string tag = "dt=" + fix(dt, 2) + ": ";
        const auto free = compute_series(ic, {64, dt, 0.0, 64});
        double ent0 = 0, vel0 = 0;
        for (const auto& s : free.samples) {
            ent0 = std::max(ent0, s.entropy_bits);
            vel0 = std::max(vel0, std::abs(s.velocity + 1.0));
        }
        v.expect(ent0 <= 1e-9, tag + "m=0 max entropy " + sci(ent0) + " <= 1e-9");
        v.expect(vel0 <= 1e-9, tag + "m=0 max |v + 1| " + sci(vel0) + " <= 1e-9");

        const auto massive = compute_series(ic, {64, dt, pi / 4, 64});
        const auto ent = massive.entropy();
        const auto vel = massive.velocity();
        const double smax = *std::max_element(ent.begin(), ent.end());
        const auto [lo, hi] = std::minmax_element(vel.begin(), vel.end());
        v.expect(smax > 0.1, tag + "m=pi/4 max entropy " + fix(smax) + " > 0.1");
        v.expect(*hi - *lo > 0.05, tag + "velocity peak-to-peak " + fix(*hi - *lo) + " > 0.05");
        const auto be = zb_metrics(ent).dominant_bin;
        const auto bv = zb_metrics(vel).dominant_bin;
        const auto gap = be > bv ? be - bv : bv - be;
        v.expect(be > 0 && bv > 0 && gap <= 1,
                 tag + "dominant bins entropy " + std::to_string(be) + " / velocity " + std::to_string(bv));
    }
}

// 7. Size and mass dependence across the N = 32, 64, 128 sweep.
void size_sweep(Verdict& v) {
    const auto rows = compute_sweep(default_sweep_config());
    auto row = [&](std::size_t n, double m) {
        for (const auto& r : rows) {
            if (r.n_sites == n && r.mass == m && r.dt == 1.0) return r;
        }
        throw std::logic_error("missing sweep row");
    };
    const std::size_t sizes[] = {32, 64, 128};
    for (double m : {pi / 4, pi / 8}) {
        const std::string tag = m > 0.5 ? "m=pi/4" : "m=pi/8";
        std::string ent = tag + " mean entropy", amp = tag + " ZB amplitude";
        bool ent_ok = true, amp_ok = true;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto r = row(sizes[i], m);
            ent += (i ? " -> " : " ") + fix(r.mean_entropy_bits);
            amp += (i ? " -> " : " ") + fix(r.zb.amplitude);
            if (i) {
                const auto p = row(sizes[i - 1], m);
                ent_ok = ent_ok && r.mean_entropy_bits >= p.mean_entropy_bits;
                amp_ok = amp_ok && r.zb.amplitude <= p.zb.amplitude;
            }
        }
        v.expect(ent_ok, ent + " non-decreasing in N");
        v.expect(amp_ok, amp + " non-increasing in N");
    }
    for (std::size_t n : sizes) {
        const double f4 = row(n, pi / 4).zb.dominant_frequency, f8 = row(n, pi / 8).zb.dominant_frequency;
        v.expect(f4 > f8, "N=" + std::to_string(n) + " ZB frequency pi/4 " + fix(f4) + " > pi/8 " + fix(f8));
    }
}

// 8. Gate-level step equals the operator-level step.
void circuit_equivalence(Verdict& v) {
    Rng rng(808);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    double worst = 0;
    for (std::size_t n : {8u, 16u}) {
        for (int i = 0; i < 5; ++i) {
            const WalkParams p{n, u(rng), u(rng), 1};
            const Eigen::MatrixXcd d = circuit_unitary(build_step_circuit(p)) - StepOperator(p).dense();
            worst = std::max(worst, d.cwiseAbs().maxCoeff());
        }
    }
    v.expect(worst <= 1e-8, "max |circuit - step| = " + sci(worst) + " <= 1e-8");
    double qft = 0;
    for (int k = 1; k <= 4; ++k) {
        const Eigen::MatrixXcd d = circuit_unitary(build_qft(k)) - oracle::fourier_matrix(std::size_t{1} << k);
        qft = std::max(qft, d.cwiseAbs().maxCoeff());
    }
    v.expect(qft <= 1e-10, "max |qft - F| = " + sci(qft) + " <= 1e-10 for N <= 16");
}

// 9. Depth of the step circuit versus lattice size.
void depth_curve(Verdict& v) {
    std::vector<long> depth;
    std::string curve = "depth(N=8..1024):";
    for (int k = 3; k <= 10; ++k) {
        depth.push_back(static_cast<long>(depth_and_counts(build_step_circuit({std::size_t{1} << k, 1.0, 0.5, 1})).depth));
        curve += " " + std::to_string(depth.back());
    }
    bool increasing = true;
    for (std::size_t i = 1; i < depth.size(); ++i) increasing = increasing && depth[i] > depth[i - 1];
    v.expect(increasing, curve + " strictly increasing");
    // Bounded curvature: no second difference exceeds the first step of the curve.
    const long scale = depth[1] - depth[0];
    long worst = 0;
    for (std::size_t i = 2; i < depth.size(); ++i) worst = std::max(worst, std::abs(depth[i] - 2 * depth[i - 1] + depth[i - 2]));
    v.expect(worst <= scale, "max |second difference| " + std::to_string(worst) + " <= " + std::to_string(scale));
}

// 10. The built-in invariant suite.
void invariant_suite(Verdict& v) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = run_verification();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& r : results) v.expect(r.passed, r.name + " [" + r.detail + "]");
    v.expect(secs < 60.0, std::to_string(results.size()) + " checks in " + fix(secs, 2) + " s < 60 s");
}

struct Criterion {
    const char* title;
    void (*run)(Verdict&);
    double time_limit;  // seconds, 0 for none
};

const Criterion kCriteria[] = {
    {"amplitude closed form", amplitude_closed_form, 1.0},
    {"automaton limit", automaton_limit, 0.0},
    {"infinite-lattice limit", infinite_limit, 0.0},
    {"split-step order", strang_order, 0.0},
    {"entropy identity", entropy_identity, 0.0},
    {"mass on/off spacetime behaviour", massless_vs_massive, 5.0},
    {"size and mass sweep trends", size_sweep, 30.0},
    {"circuit equivalence", circuit_equivalence, 0.0},
    {"circuit depth curve", depth_curve, 0.0},
    {"global invariant suite", invariant_suite, 60.0},
};

bool run_one(int index) {
    const auto& c = kCriteria[index - 1];
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        c.run(v);
    } catch (const std::exception& e) {
        v.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.time_limit > 0) v.expect(secs < c.time_limit, "runtime " + fix(secs, 2) + " s < " + fix(c.time_limit, 0) + " s");
    std::string detail = v.detail.str();
    if (detail.size() >= 2) detail.resize(detail.size() - 2);
    std::printf("[%s] criterion %d: %s (%.2fs) %s\n", v.passed ? "PASS" : "FAIL", index, c.title, secs, detail.c_str());
    std::fflush(stdout);
    return v.passed;
}

}  // namespace

int main(int argc, char** argv) {
    constexpr int count = static_cast<int>(std::size(kCriteria));
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        const int k = std::atoi(argv[i]);
        if (k < 1 || k > count) {
            std::fprintf(stderr, "usage: %s [criterion 1..%d ...]\n", argv[0], count);
            return 2;
        }
        selected.push_back(k);
    }
    if (selected.empty()) {
        for (int k = 1; k <= count; ++k) selected.push_back(k);
    }
    int failed = 0;
    for (int k : selected) failed += run_one(k) ? 0 : 1;
    if (selected.size() > 1) std::printf("%zu criteria, %d failed\n", selected.size(), failed);
    return failed ? 1 : 0;
}
