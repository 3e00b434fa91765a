// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file amplitudes.hpp
 * @brief Hopping amplitudes of the fractional translation operator.
 *
 *   A_q^{(+)}(δt) = (1/N) Σ_j ω^{j(δt − q)},   A_q^{(−)}(δt) = (1/N) Σ_j ω^{j(δt + q)}
 *
 * Positive q is the right-hand neighbour. In the walk, the L block maps
 * ψ_L(x) ← Σ_q A_q^{(+)} ψ_L(x − q) and the R block is its adjoint,
 * ψ_R(x) ← Σ_q conj(A_q^{(+)}) ψ_R(x + q) (see evolution.hpp).
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ctqw/momentum.hpp"
#include "ctqw/state.hpp"

namespace ctqw {

/// Closed form (1/N)(1 − e^{i2πa})/(1 − e^{i2πa/N}), a = δt ∓ q; equals 1 when a ≡ 0 (mod N).
[[nodiscard]] cplx transition_amplitude(long q, double dt, std::size_t n_sites, PhaseSign sign);

/// Literal sum over j = 0..N−1.
[[nodiscard]] cplx transition_amplitude_bruteforce(long q, double dt, std::size_t n_sites, PhaseSign sign);

/// N → ∞ probability (1 − cos 2πa)/(2π²a²), a = δt ∓ q; 1 at a = 0.
[[nodiscard]] double infinite_limit_prob(long q, double dt, PhaseSign sign);

struct AmplitudeEntry {
    double dt;
    long q;
    cplx amplitude;
    double prob;
    double prob_infinite;
};

struct AmplitudeProfile {
    std::size_t n_sites = 0;
    PhaseSign sign = PhaseSign::Plus;
    std::vector<AmplitudeEntry> entries;  // grouped by dt, ascending q within a group
};

/**
 * Tabulates A_q for every δt in `dts` and q in [q_min, q_max]. The default
 * range is the full display window (−N/2, N/2], over which each δt group
 * sums to probability 1.
 */
[[nodiscard]] AmplitudeProfile emit_profile(std::span<const double> dts, std::size_t n_sites,
                                            PhaseSign sign = PhaseSign::Plus);
[[nodiscard]] AmplitudeProfile emit_profile(std::span<const double> dts, std::size_t n_sites, long q_min, long q_max,
                                            PhaseSign sign = PhaseSign::Plus);

}  // namespace ctqw
