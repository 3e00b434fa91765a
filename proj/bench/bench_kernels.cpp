// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts.
// Each benchmark takes log2 of the block length as its argument.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ctqw/evolution.hpp"
#include "ctqw/kernels.hpp"

namespace {

using ctqw::kernels::cplx;
namespace k = ctqw::kernels;

std::vector<cplx> random_vector(std::size_t n) {
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> g;
    std::vector<cplx> v(n);
    for (auto& x : v) x = {g(rng), g(rng)};
    return v;
}

std::size_t length(const benchmark::State& st) { return std::size_t{1} << st.range(0); }

void set_bytes(benchmark::State& st, std::size_t n) {
    st.SetBytesProcessed(static_cast<int64_t>(st.iterations()) * static_cast<int64_t>(n * sizeof(cplx)));
}

template <auto Fft>
void BM_Fft(benchmark::State& st) {
    const std::size_t n = length(st);
    const k::FftPlan plan(n);
    auto v = random_vector(n);
    for (auto _ : st) {
        Fft(plan, v, k::Direction::Forward);
        benchmark::DoNotOptimize(v.data());
    }
    set_bytes(st, n);
}

template <auto Mul>
void BM_Diagonal(benchmark::State& st) {
    const std::size_t n = length(st);
    auto v = random_vector(n);
    auto d = random_vector(n);
    for (auto& x : d) x /= std::abs(x);
    for (auto _ : st) {
        Mul(v, d);
        benchmark::DoNotOptimize(v.data());
    }
    set_bytes(st, n);
}

template <auto Coin>
void BM_Coin(benchmark::State& st) {
    const std::size_t n = length(st);
    auto a = random_vector(n), b = random_vector(n);
    for (auto _ : st) {
        Coin(a, b, 0.6, 0.8);
        benchmark::DoNotOptimize(a.data());
    }
    set_bytes(st, 2 * n);
}

template <auto Norm>
void BM_Norm(benchmark::State& st) {
    const std::size_t n = length(st);
    const auto v = random_vector(n);
    for (auto _ : st) benchmark::DoNotOptimize(Norm(v));
    set_bytes(st, n);
}

// Full step assembled from the serial kernels, the reference for the library step.
void BM_StepSerial(benchmark::State& st) {
    const std::size_t n = length(st);
    const k::FftPlan plan(n);
    auto v = random_vector(2 * n);
    const auto dm = random_vector(n), dp = random_vector(n);
    std::span<cplx> r(v.data(), n), l(v.data() + n, n);
    for (auto _ : st) {
        k::serial::fft(plan, r, k::Direction::Forward);
        k::serial::fft(plan, l, k::Direction::Forward);
        k::serial::multiply_diagonal(l, dp);
        k::serial::apply_coin(r, l, 0.6, 0.8);
        k::serial::multiply_diagonal(r, dm);
        k::serial::fft(plan, r, k::Direction::Inverse);
        k::serial::fft(plan, l, k::Direction::Inverse);
        benchmark::DoNotOptimize(v.data());
    }
    set_bytes(st, 2 * n);
}

void BM_StepLibrary(benchmark::State& st) {
    const std::size_t n = length(st);
    const ctqw::StepOperator op({n, 0.5, 1.0, 1});
    auto v = random_vector(2 * n);
    for (auto _ : st) {
        op.apply_inplace(v);
        benchmark::DoNotOptimize(v.data());
    }
    set_bytes(st, 2 * n);
}

constexpr int kMinLog = 10;
constexpr int kMaxLog = 22;

}  // namespace

BENCHMARK(BM_Fft<k::serial::fft>)->Name("fft/serial")->DenseRange(kMinLog, kMaxLog, 4);
BENCHMARK(BM_Fft<k::omp::fft>)->Name("fft/omp")->DenseRange(kMinLog, kMaxLog, 4)->UseRealTime();
BENCHMARK(BM_Diagonal<k::serial::multiply_diagonal>)->Name("diagonal/serial")->DenseRange(kMinLog, kMaxLog, 4);
BENCHMARK(BM_Diagonal<k::omp::multiply_diagonal>)->Name("diagonal/omp")->DenseRange(kMinLog, kMaxLog, 4)->UseRealTime();
BENCHMARK(BM_Coin<k::serial::apply_coin>)->Name("coin/serial")->DenseRange(kMinLog, kMaxLog, 4);
BENCHMARK(BM_Coin<k::omp::apply_coin>)->Name("coin/omp")->DenseRange(kMinLog, kMaxLog, 4)->UseRealTime();
BENCHMARK(BM_Norm<k::serial::norm2>)->Name("norm2/serial")->DenseRange(kMinLog, kMaxLog, 4);
BENCHMARK(BM_Norm<k::omp::norm2>)->Name("norm2/omp")->DenseRange(kMinLog, kMaxLog, 4)->UseRealTime();
BENCHMARK(BM_StepSerial)->Name("step/serial")->DenseRange(kMinLog, kMaxLog, 4);
BENCHMARK(BM_StepLibrary)->Name("step/omp")->DenseRange(kMinLog, kMaxLog, 4)->UseRealTime();

BENCHMARK_MAIN();
