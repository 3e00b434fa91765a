// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file kernels.hpp
 * @brief Data-parallel inner loops of the walk engine.
 *
 * Every kernel exists twice: `serial::` is the plain reference loop kept for
 * testing and benchmarking, `omp::` is the OpenMP version the engine calls.
 * Both produce bitwise-identical results. Reductions accumulate over fixed
 * chunks of kReductionChunk elements and then sum the partials in order, so
 * the result does not depend on the thread count.
 *
 * Without OpenMP the `omp::` kernels compile to the same serial loops.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ctqw::kernels {

using cplx = std::complex<double>;

/// Sign of the exponent: Forward uses e^{+2πi jl/N}, Inverse e^{−2πi jl/N}.
enum class Direction { Forward, Inverse };

inline constexpr std::size_t kReductionChunk = 4096;
/// Below this length the omp kernels run on the calling thread.
inline constexpr std::size_t kParallelMin = std::size_t{1} << 14;

/**
 * Precomputed twiddles and bit-reversal table for an in-place radix-2
 * transform of length n (power of two). Scaling is 1/√n in both directions,
 * so the transform is unitary.
 */
class FftPlan {
public:
    explicit FftPlan(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] std::span<const cplx> twiddles() const noexcept { return twiddles_; }
    [[nodiscard]] std::span<const std::size_t> bit_reversal() const noexcept { return bitrev_; }

private:
    std::size_t n_;
    std::vector<cplx> twiddles_;       // e^{2πik/n}, k < n/2
    std::vector<std::size_t> bitrev_;
};

/// Number of threads the omp kernels may use (1 without OpenMP).
[[nodiscard]] int max_threads() noexcept;

namespace serial {

/// O(n²) unitary DFT straight from the matrix definition; any length.
void dft_naive(std::span<const cplx> in, std::span<cplx> out, Direction dir);

void fft(const FftPlan& plan, std::span<cplx> data, Direction dir);

/// v[i] *= d[i]
void multiply_diagonal(std::span<cplx> v, std::span<const cplx> d);

/// (u, l) ← (c·u − i·s·l, −i·s·u + c·l), elementwise.
void apply_coin(std::span<cplx> upper, std::span<cplx> lower, double c, double s);

/// Nearest-neighbour automaton update over a 2N spin-major field:
/// R(x) ← c·R(x+1) − i·s·L(x),  L(x) ← c·L(x−1) − i·s·R(x), indices mod N.
void dca_update(std::span<const cplx> in, std::span<cplx> out, double c, double s);

[[nodiscard]] double norm2(std::span<const cplx> v);
/// Σ a[i]·conj(b[i])
[[nodiscard]] cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b);
void abs2(std::span<const cplx> v, std::span<double> out);

}  // namespace serial

namespace omp {

void fft(const FftPlan& plan, std::span<cplx> data, Direction dir);
void multiply_diagonal(std::span<cplx> v, std::span<const cplx> d);
void apply_coin(std::span<cplx> upper, std::span<cplx> lower, double c, double s);
void dca_update(std::span<const cplx> in, std::span<cplx> out, double c, double s);
[[nodiscard]] double norm2(std::span<const cplx> v);
[[nodiscard]] cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b);
void abs2(std::span<const cplx> v, std::span<double> out);

}  // namespace omp

}  // namespace ctqw::kernels
