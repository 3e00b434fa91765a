// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>
#include <vector>

#include "doctest.h"

#include "ctqw/kernels.hpp"

using namespace ctqw::kernels;

namespace {

std::vector<cplx> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v;
}

}  // namespace

TEST_CASE("FftPlan rejects bad sizes") {
    CHECK_THROWS_AS(FftPlan(0), std::invalid_argument);
    CHECK_THROWS_AS(FftPlan(24), std::invalid_argument);
    CHECK(FftPlan(1).size() == 1);
}

TEST_CASE("fft equals the direct DFT in both directions") {
    for (std::size_t n = 1; n <= 512; n *= 2) {
        const FftPlan plan(n);
        for (auto dir : {Direction::Forward, Direction::Inverse}) {
            auto v = random_vector(n, n);
            std::vector<cplx> ref(n);
            serial::dft_naive(v, ref, dir);
            serial::fft(plan, v, dir);
            for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v[i] - ref[i]) < 1e-10);
        }
    }
}

TEST_CASE("serial and OpenMP kernels are bitwise identical above the parallel threshold") {
    const std::size_t n = kParallelMin * 4;
    const FftPlan plan(n);
    auto a = random_vector(2 * n, 7);
    auto b = a;
    std::span<cplx> sa(a), sb(b);

    serial::fft(plan, sa.first(n), Direction::Forward);
    omp::fft(plan, sb.first(n), Direction::Forward);
    CHECK(a == b);

    const auto d = random_vector(n, 8);
    serial::multiply_diagonal(sa.first(n), d);
    omp::multiply_diagonal(sb.first(n), d);
    CHECK(a == b);

    serial::apply_coin(sa.first(n), sa.last(n), 0.3, 0.95);
    omp::apply_coin(sb.first(n), sb.last(n), 0.3, 0.95);
    CHECK(a == b);

    std::vector<cplx> oa(2 * n), ob(2 * n);
    serial::dca_update(a, oa, 0.8, 0.6);
    omp::dca_update(b, ob, 0.8, 0.6);
    CHECK(oa == ob);

    CHECK(serial::norm2(a) == omp::norm2(b));
    CHECK(serial::dot_conj(sa.first(n), sa.last(n)) == omp::dot_conj(sb.first(n), sb.last(n)));

    std::vector<double> pa(2 * n), pb(2 * n);
    serial::abs2(a, pa);
    omp::abs2(b, pb);
    CHECK(pa == pb);
}

TEST_CASE("coin and reductions on small inputs") {
    std::vector<cplx> up{1.0, cplx(0, 1)}, lo{0.0, 2.0};
    serial::apply_coin(up, lo, 0.0, 1.0);
    CHECK(up[0] == cplx(0, 0));
    CHECK(lo[0] == cplx(0, -1));
    CHECK(up[1] == cplx(0, -2));
    CHECK(lo[1] == cplx(1, 0));
    CHECK(serial::norm2(up) == doctest::Approx(4.0));
    CHECK(serial::dot_conj(std::vector<cplx>{cplx(0, 1)}, std::vector<cplx>{cplx(0, 1)}) == cplx(1.0, 0.0));
}

TEST_CASE("kernels reject size mismatches") {
    std::vector<cplx> a(4), b(3);
    CHECK_THROWS_AS(serial::apply_coin(a, b, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(serial::multiply_diagonal(a, b), std::invalid_argument);
    CHECK_THROWS_AS(omp::multiply_diagonal(a, b), std::invalid_argument);
    CHECK(max_threads() >= 1);
}
