// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file observables.hpp
 * @brief Reduced density matrices, entanglement entropy and the velocity −⟨Z⟩.
 *
 * Entropies are in bits, so a maximally mixed spin carries exactly 1.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ctqw/momentum.hpp"
#include "ctqw/state.hpp"

namespace ctqw {

/// ρ_c[s, s'] = Σ_x ψ_s(x)·conj(ψ_s'(x)).
[[nodiscard]] Mat2 reduced_internal(const SpinorField& field);

/// ρ_x[x, y] = Σ_s ψ_s(x)·conj(ψ_s(y)). Dense, so limited to N <= 256.
[[nodiscard]] Eigen::MatrixXcd reduced_external(const SpinorField& field);

/// Closed-form eigenvalues of a 2×2 Hermitian matrix, ascending.
[[nodiscard]] std::array<double, 2> hermitian_eigenvalues(const Mat2& rho);

/**
 * −Σ λ log₂ λ over the eigenvalues. Eigenvalues in [−1e-10, 0) count as 0.
 * Throws std::invalid_argument if rho is not Hermitian within 1e-10 or has
 * an eigenvalue below −1e-10.
 */
[[nodiscard]] double entropy_bits(const Mat2& rho);
[[nodiscard]] double entropy_bits(const Eigen::MatrixXcd& rho);

/// −⟨σ_z⟩ = ρ_c[1,1] − ρ_c[0,0].
[[nodiscard]] double velocity(const SpinorField& field);

/// |ψ_R(x)|² + |ψ_L(x)|², indexed by internal site.
[[nodiscard]] std::vector<double> position_distribution(const SpinorField& field);

struct ObservableSample {
    double time = 0.0;
    double entropy_bits = 0.0;
    double velocity = 0.0;
    double norm = 0.0;
};

[[nodiscard]] ObservableSample observe(const SpinorField& field, double time);

struct ZbMetrics {
    double amplitude = 0.0;           // (max − min)/2 over the retained window
    double dominant_frequency = 0.0;  // cycles per step
    std::size_t dominant_bin = 0;     // DFT bin of the retained window, 0 for a flat series
    std::size_t window = 0;           // retained samples
};

/// Default transient to drop: 10% of the series, rounded down.
[[nodiscard]] std::size_t default_transient_skip(std::size_t series_length) noexcept;

/**
 * Oscillation metrics of a time series after dropping `transient_skip`
 * leading samples (default_transient_skip when empty). The dominant
 * frequency is the largest non-DC bin, 1..L/2, of the mean-subtracted window.
 * Throws std::invalid_argument when fewer than 8 samples remain.
 */
[[nodiscard]] ZbMetrics zb_metrics(std::span<const double> series,
                                   std::optional<std::size_t> transient_skip = std::nullopt);

}  // namespace ctqw
