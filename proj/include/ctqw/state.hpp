// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file state.hpp
 * @brief Two-component spinor field on a periodic 1D lattice.
 *
 * Layout is spin-major: amplitude index s·N + x holds ψ_s(x), with s = 0
 * the R component (σ_z = +1) and s = 1 the L component (σ_z = −1). The spin
 * is therefore the most significant index, which is also the top wire of
 * the step circuit.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <variant>
#include <vector>

namespace ctqw {

using cplx = std::complex<double>;

enum class Spin : int { R = 0, L = 1 };

[[nodiscard]] constexpr bool is_power_of_two(std::size_t n) noexcept {
    return n != 0 && (n & (n - 1)) == 0;
}

/// Throws std::invalid_argument unless n is a power of two and n >= 2.
void require_site_count(std::size_t n);

/** Flat amplitude index of (spin, site): s·N + x. */
[[nodiscard]] constexpr std::size_t flat_index(Spin s, std::size_t x, std::size_t n_sites) noexcept {
    return static_cast<std::size_t>(s) * n_sites + x;
}

/** Inverse of flat_index. */
struct SpinSite {
    Spin spin;
    std::size_t site;
    bool operator==(const SpinSite&) const = default;
};
[[nodiscard]] constexpr SpinSite split_index(std::size_t index, std::size_t n_sites) noexcept {
    return {index < n_sites ? Spin::R : Spin::L, index % n_sites};
}

/**
 * Signed display coordinate of site x: x if x <= N/2, else x − N.
 * Range (−N/2, N/2]. Throws std::out_of_range for x >= N.
 */
[[nodiscard]] long display_coord(std::size_t x, std::size_t n_sites);

/** Inverse of display_coord. */
[[nodiscard]] std::size_t site_from_display(long coord, std::size_t n_sites);

/**
 * 2N complex amplitudes over N sites.
 *
 * Value type; mutation goes through a fresh construction. Normalization is
 * not enforced on construction (linear combinations of fields are useful in
 * tests); init_state and the evolution operators produce unit-norm fields.
 */
class SpinorField {
public:
    SpinorField(std::size_t n_sites, std::vector<cplx> amps);

    static SpinorField zeros(std::size_t n_sites);

    [[nodiscard]] std::size_t n_sites() const noexcept { return n_sites_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const cplx> amps() const noexcept { return amps_; }
    [[nodiscard]] std::span<const cplx> component(Spin s) const noexcept {
        return std::span<const cplx>(amps_).subspan(static_cast<std::size_t>(s) * n_sites_, n_sites_);
    }
    [[nodiscard]] const cplx& operator()(Spin s, std::size_t x) const { return amps_[flat_index(s, x, n_sites_)]; }
    [[nodiscard]] const cplx& operator[](std::size_t i) const { return amps_[i]; }

    /// Moves the amplitudes out; used by operators that build the next field in place.
    [[nodiscard]] std::vector<cplx> release() && { return std::move(amps_); }

private:
    std::size_t n_sites_;
    std::vector<cplx> amps_;
};

struct SpinAmplitudes {
    cplx r{1.0, 0.0};
    cplx l{0.0, 0.0};
};

struct SitePosition {
    std::size_t site = 0;
};

/// Gaussian envelope; center and sigma in lattice units, center taken modulo N.
struct GaussianPosition {
    double center = 0.0;
    double sigma = 1.0;
};

struct InitialCondition {
    SpinAmplitudes spin;
    std::variant<SitePosition, GaussianPosition> position = SitePosition{};
};

/**
 * Product state spin ⊗ position.
 *
 * The spin pair is normalized here; a zero pair, an out-of-range site, a
 * non-positive sigma or a bad site count throw std::invalid_argument.
 */
[[nodiscard]] SpinorField init_state(const InitialCondition& ic, std::size_t n_sites);

[[nodiscard]] double norm(const SpinorField& field);
[[nodiscard]] double norm(std::span<const cplx> amps);

}  // namespace ctqw
