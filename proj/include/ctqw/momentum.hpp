// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file momentum.hpp
 * @brief Real/momentum-space transforms and momentum-diagonal phase operators.
 *
 * The transform is F[j,l] = ω^{jl}/√N with ω = e^{2πi/N}; dft_inverse is F†.
 * Fractional powers of the momentum phase operator use the j ∈ [0, N) branch:
 * values[j] = ω^{±j·δt}. This is the branch on which the closed-form hopping
 * amplitudes are a geometric sum, so it is also the branch the walk uses.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ctqw/state.hpp"

namespace ctqw {

enum class PhaseSign { Plus, Minus };

using Mat2 = Eigen::Matrix2cd;

/// Unitary forward transform of one N-component block (fast radix-2 path).
[[nodiscard]] std::vector<cplx> dft_forward(std::span<const cplx> component);
[[nodiscard]] std::vector<cplx> dft_inverse(std::span<const cplx> component);

/// Same transforms by direct O(N²) summation; kept as a cross-check.
[[nodiscard]] std::vector<cplx> dft_forward_naive(std::span<const cplx> component);
[[nodiscard]] std::vector<cplx> dft_inverse_naive(std::span<const cplx> component);

/// Both spin blocks transformed independently.
[[nodiscard]] SpinorField to_momentum(const SpinorField& field);
[[nodiscard]] SpinorField to_position(const SpinorField& field);

struct PhaseDiagonal {
    std::size_t n_sites = 0;
    double dt = 0.0;
    PhaseSign sign = PhaseSign::Plus;
    std::vector<cplx> values;
};

/// values[j] = exp(±i·2π·j·δt/N), j = 0..N−1.
[[nodiscard]] PhaseDiagonal phase_diagonal(PhaseSign sign, double dt, std::size_t n_sites);

/// Momenta k_j = 2πj/N wrapped into (−π, π].
struct ModeGrid {
    std::size_t n_sites = 0;
    std::vector<double> k;
};
[[nodiscard]] ModeGrid mode_grid(std::size_t n_sites);

/**
 * exp(−i·H·δt) for the single-mode Hamiltonian H = −σ_z·k + μ·σ_x, in closed
 * form: cos(Eδt)·I − i·sin(Eδt)·H/E with E = √(k² + μ²). Identity at E = 0.
 */
[[nodiscard]] Mat2 exact_mode_propagator(double k, double mu, double dt);

}  // namespace ctqw
