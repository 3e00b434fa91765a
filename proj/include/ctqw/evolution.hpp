// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file evolution.hpp
 * @brief One step of the continuous-time walk and its nearest-neighbour limit.
 *
 * A step is the split operator
 *
 *     U(δt) = diag(Q₋^{δt}, I) · C(θ) · diag(I, Q₊^{δt}),   θ = m·δt,
 *
 * applied in momentum space with C(θ) = [[cos θ/2, −i sin θ/2],
 * [−i sin θ/2, cos θ/2]]. The momentum transform runs forward (F) into the
 * phase multiply and back with F†, which makes the R block pull from x+1 and
 * the L block from x−1 at δt = 1, i.e. the cellular-automaton update.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Core>

#include "ctqw/kernels.hpp"
#include "ctqw/momentum.hpp"
#include "ctqw/state.hpp"

namespace ctqw {

struct WalkParams {
    std::size_t n_sites = 0;
    double dt = 1.0;
    double mass = 0.0;
    std::size_t steps = 0;

    [[nodiscard]] double theta() const noexcept { return mass * dt; }
};

/// Throws std::invalid_argument on a bad site count, non-positive or non-finite δt, or non-finite mass.
void validate(const WalkParams& params);

/// Factored step operator with precomputed phase diagonals; reusable across steps.
class StepOperator {
public:
    explicit StepOperator(const WalkParams& params);

    [[nodiscard]] std::size_t n_sites() const noexcept { return n_sites_; }
    [[nodiscard]] double dt() const noexcept { return dt_; }
    [[nodiscard]] double theta() const noexcept { return theta_; }

    [[nodiscard]] SpinorField apply(const SpinorField& field) const;

    /// In-place application on a 2N spin-major buffer.
    void apply_inplace(std::span<cplx> amps) const;

    /// 2N×2N matrix, built column by column from apply(). Only for N <= 64.
    [[nodiscard]] Eigen::MatrixXcd dense() const;

private:
    std::size_t n_sites_;
    double dt_;
    double theta_;
    double cos_half_;
    double sin_half_;
    kernels::FftPlan plan_;
    std::vector<cplx> minus_phase_;  // acts on the R block
    std::vector<cplx> plus_phase_;   // acts on the L block
};

[[nodiscard]] SpinorField step(const SpinorField& field, const WalkParams& params);

/**
 * Cellular-automaton step:
 *   ψ_R(x) ← cos(θ/2)·ψ_R(x+1) − i·sin(θ/2)·ψ_L(x)
 *   ψ_L(x) ← cos(θ/2)·ψ_L(x−1) − i·sin(θ/2)·ψ_R(x)
 * with periodic indices, from the pre-step values.
 */
[[nodiscard]] SpinorField dca_step(const SpinorField& field, double theta);

/// Full trajectory, T+1 fields. Memory grows as N·T; prefer evolve_streaming for long runs.
[[nodiscard]] std::vector<SpinorField> evolve(const InitialCondition& ic, const WalkParams& params);

/// Calls visit(t, field) for t = 0..T without keeping the history.
void evolve_streaming(const InitialCondition& ic, const WalkParams& params,
                      const std::function<void(std::size_t, const SpinorField&)>& visit);

/// Per-mode split operator diag(e^{ikδt}, 1)·C(2μδt)·diag(1, e^{−ikδt}).
[[nodiscard]] Mat2 split_mode_operator(double k, double mu, double dt);

/// Max-entry deviation of split_mode_operator from exact_mode_propagator.
[[nodiscard]] double trotter_local_error(double k, double mu, double dt);

/// Effective single-mode mass of the split step with coin angle θ: μ = θ/(2δt).
[[nodiscard]] constexpr double effective_mass(double theta, double dt) noexcept { return theta / (2.0 * dt); }

}  // namespace ctqw
