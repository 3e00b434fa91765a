// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "ctqw/amplitudes.hpp"
#include "ctqw/evolution.hpp"
#include "ctqw/state.hpp"

using namespace ctqw;
using std::numbers::pi;

namespace {

double block_population(const SpinorField& f, Spin s) {
    double p = 0;
    for (const auto& v : f.component(s)) p += std::norm(v);
    return p;
}

SpinorField delta(std::size_t n, Spin s, std::size_t x, cplx value = 1.0) {
    auto f = SpinorField::zeros(n);
    std::vector<cplx> a(f.amps().begin(), f.amps().end());
    a[flat_index(s, x, n)] = value;
    return SpinorField(n, std::move(a));
}

}  // namespace

TEST_CASE("WalkParams validation") {
    CHECK_NOTHROW(validate(WalkParams{16, 0.5, 1.0, 10}));
    CHECK_THROWS_AS(validate(WalkParams{12, 0.5, 1.0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(validate(WalkParams{16, std::nan(""), 1.0, 10}), std::invalid_argument);
    CHECK_THROWS_AS(validate(WalkParams{16, 1.0, INFINITY, 10}), std::invalid_argument);
    CHECK(WalkParams{16, 0.5, 0.8, 1}.theta() == doctest::Approx(0.4));
}

TEST_CASE("massless step preserves spin-block populations") {
    const InitialCondition ic{{0.6, cplx(0, 0.8)}, GaussianPosition{3.0, 2.0}};
    for (double dt : {1.0, 0.5, 0.3}) {
        const WalkParams p{32, dt, 0.0, 40};
        for (const auto& f : evolve(ic, p)) {
            CHECK(std::abs(block_population(f, Spin::R) - 0.36) < 1e-12);
            CHECK(std::abs(block_population(f, Spin::L) - 0.64) < 1e-12);
        }
    }
}

TEST_CASE("step at dt = 1 equals the automaton update") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> th(-pi, pi);
    for (std::size_t n : {2u, 8u, 32u, 256u}) {
        for (int i = 0; i < 20; ++i) {
            const double theta = th(rng);
            const auto f = oracle::random_field(n, rng);
            CHECK(oracle::max_abs_diff(step(f, {n, 1.0, theta, 1}), dca_step(f, theta)) < 1e-12);
        }
    }
}

TEST_CASE("step preserves the norm") {
    std::mt19937_64 rng(19);
    for (double dt : {0.1, 0.5, 0.77, 1.0, 1.9}) {
        const auto f = oracle::random_field(64, rng);
        CHECK(std::abs(norm(step(f, {64, dt, 1.3, 1})) - 1.0) < 1e-10);
    }
}

TEST_CASE("dca_step examples") {
    const std::size_t n = 8;
    SUBCASE("right mover shifts left with no mass") {
        const auto f = dca_step(delta(n, Spin::R, 0), 0.0);
        CHECK(f(Spin::R, n - 1) == cplx(1.0, 0.0));
        CHECK(norm(f) == doctest::Approx(1.0));
    }
    SUBCASE("theta = pi is a pure coin swap") {
        std::mt19937_64 rng(23);
        const auto f = oracle::random_field(n, rng);
        const auto g = dca_step(f, pi);
        for (std::size_t x = 0; x < n; ++x) {
            CHECK(std::abs(g(Spin::R, x) - cplx(0, -1) * f(Spin::L, x)) < 1e-15);
            CHECK(std::abs(g(Spin::L, x) - cplx(0, -1) * f(Spin::R, x)) < 1e-15);
        }
    }
    SUBCASE("left component moves right two sites in two steps") {
        const auto f = dca_step(dca_step(delta(n, Spin::L, 0), 0.0), 0.0);
        CHECK(f(Spin::L, 2) == cplx(1.0, 0.0));
    }
}

TEST_CASE("dca_step matches dense shift matrices") {
    std::mt19937_64 rng(29);
    const std::size_t n = 16;
    const double theta = 0.9;
    const auto f = oracle::random_field(n, rng);
    const Eigen::VectorXcd r = oracle::as_vector(f).head(n);
    const Eigen::VectorXcd l = oracle::as_vector(f).tail(n);
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const Eigen::VectorXcd r2 = c * (oracle::shift_plus(n) * r) + cplx(0, -s) * l;
    const Eigen::VectorXcd l2 = c * (oracle::shift_minus(n) * l) + cplx(0, -s) * r;
    const auto g = dca_step(f, theta);
    for (std::size_t x = 0; x < n; ++x) {
        CHECK(std::abs(g(Spin::R, x) - r2(x)) < 1e-15);
        CHECK(std::abs(g(Spin::L, x) - l2(x)) < 1e-15);
    }
}

TEST_CASE("dense step operator equals the block matrix built from dense transforms") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> u(0.05, 2.0);
    for (std::size_t n : {2u, 4u, 8u, 16u}) {
        for (int i = 0; i < 3; ++i) {
            const WalkParams p{n, u(rng), u(rng), 1};
            const auto dense = StepOperator(p).dense();
            CHECK((dense - oracle::block_step(n, p.dt, p.theta())).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("dense step operator is unitary and matches apply") {
    std::mt19937_64 rng(37);
    const WalkParams p{8, 0.37, 1.1, 1};
    const StepOperator op(p);
    const auto u = op.dense();
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-10);
    const auto f = oracle::random_field(8, rng);
    const Eigen::VectorXcd ref = u * oracle::as_vector(f);
    const auto g = op.apply(f);
    for (std::size_t i = 0; i < 16; ++i) CHECK(std::abs(g[i] - ref(i)) < 1e-12);
    CHECK_THROWS_AS((void)StepOperator(WalkParams{128, 1.0, 0.0, 1}).dense(), std::invalid_argument);
}

TEST_CASE("step is linear") {
    std::mt19937_64 rng(41);
    const WalkParams p{32, 0.61, 0.7, 1};
    const auto u = oracle::random_field(32, rng), v = oracle::random_field(32, rng);
    const cplx a(0.3, -1.2), b(2.0, 0.5);
    std::vector<cplx> mix(u.size());
    for (std::size_t i = 0; i < mix.size(); ++i) mix[i] = a * u[i] + b * v[i];
    const auto lhs = step(SpinorField(32, mix), p);
    const auto su = step(u, p), sv = step(v, p);
    for (std::size_t i = 0; i < mix.size(); ++i) CHECK(std::abs(lhs[i] - (a * su[i] + b * sv[i])) < 1e-10);
}

TEST_CASE("one step from a delta spreads by the transition amplitudes") {
    const std::size_t n = 16;
    const std::size_t x0 = 5;
    for (double dt : {0.5, 0.25, 1.0, 1.4}) {
        const double theta = 0.8;
        const double c = std::cos(theta / 2), s = std::sin(theta / 2);
        const WalkParams p{n, dt, theta / dt, 1};

        const auto fl = step(delta(n, Spin::L, x0), p);
        const auto fr = step(delta(n, Spin::R, x0), p);
        for (long q = -7; q <= 8; ++q) {
            const std::size_t right = static_cast<std::size_t>((static_cast<long>(x0) + q + 16) % 16);
            const std::size_t left = static_cast<std::size_t>((static_cast<long>(x0) - q + 16) % 16);
            const cplx a = transition_amplitude(q, dt, n, PhaseSign::Plus);
            CHECK(std::abs(fl(Spin::L, right) - c * a) < 1e-12);
            CHECK(std::abs(fr(Spin::R, left) - c * std::conj(a)) < 1e-12);
        }
        for (std::size_t x = 0; x < n; ++x) {
            const cplx expect = x == x0 ? cplx(0, -s) : cplx(0, 0);
            CHECK(std::abs(fl(Spin::R, x) - expect) < 1e-12);
            CHECK(std::abs(fr(Spin::L, x) - expect) < 1e-12);
        }
    }
}

TEST_CASE("evolve") {
    const InitialCondition ic{{1.0, 0.0}, SitePosition{0}};
    SUBCASE("zero steps returns the initial state") {
        const auto traj = evolve(ic, {16, 1.0, 0.7, 0});
        REQUIRE(traj.size() == 1);
        CHECK(oracle::max_abs_diff(traj[0], init_state(ic, 16)) == 0.0);
    }
    SUBCASE("massless automaton returns after N steps") {
        const InitialCondition mixed{{0.6, cplx(0.0, 0.8)}, GaussianPosition{2.0, 1.3}};
        const auto traj = evolve(mixed, {16, 1.0, 0.0, 16});
        REQUIRE(traj.size() == 17);
        CHECK(oracle::max_abs_diff(traj.back(), traj.front()) < 1e-10);
    }
    SUBCASE("every element has unit norm and evolve_streaming agrees") {
        const WalkParams p{64, 0.5, pi / 4, 50};
        const auto traj = evolve(ic, p);
        std::size_t visited = 0;
        evolve_streaming(ic, p, [&](std::size_t t, const SpinorField& f) {
            CHECK(t == visited);
            CHECK(oracle::max_abs_diff(f, traj[t]) == 0.0);
            ++visited;
        });
        CHECK(visited == 51);
        for (const auto& f : traj) CHECK(std::abs(norm(f) - 1.0) < 1e-9);
    }
}

TEST_CASE("split mode operator and local error") {
    CHECK(trotter_local_error(0.9, 0.0, 0.4) < 1e-14);
    CHECK(trotter_local_error(-2.1, 0.0, 1.7) < 1e-14);
    CHECK(trotter_local_error(0.0, 1.1, 0.4) < 1e-14);
    CHECK(trotter_local_error(0.0, -0.3, 2.5) < 1e-14);

    // The per-mode split factor equals the symmetric Strang product.
    const double k = 0.7, mu = 0.45, dt = 0.3;
    const auto zhalf = oracle::propagator_by_eigendecomposition(k, 0.0, dt / 2);  // e^{iσz k δt/2}
    const auto xfull = oracle::propagator_by_eigendecomposition(0.0, mu, dt);
    const Mat2 strang = zhalf * xfull * zhalf;
    CHECK((split_mode_operator(k, mu, dt) - strang).cwiseAbs().maxCoeff() < 1e-14);

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double h : {0.2, 0.1, 0.05, 0.025}) {
        const double x = std::log(h), y = std::log(trotter_local_error(1.0, 1.0, h));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
    CHECK(slope > 2.7);
    CHECK(slope < 3.3);
    CHECK(trotter_local_error(1.0, 1.0, 0.02) / trotter_local_error(1.0, 1.0, 0.01) == doctest::Approx(8.0).epsilon(0.02));
}

TEST_CASE("effective mass") {
    static_assert(effective_mass(1.0, 0.5) == 1.0);
    CHECK(effective_mass(pi / 4, 1.0) == doctest::Approx(pi / 8));
}
