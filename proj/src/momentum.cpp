// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/momentum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ctqw/kernels.hpp"

namespace ctqw {

namespace {

using kernels::Direction;

std::vector<cplx> transform(std::span<const cplx> v, Direction dir) {
    require_site_count(v.size());
    std::vector<cplx> out(v.begin(), v.end());
    kernels::omp::fft(kernels::FftPlan(v.size()), out, dir);
    return out;
}

std::vector<cplx> transform_naive(std::span<const cplx> v, Direction dir) {
    require_site_count(v.size());
    std::vector<cplx> out(v.size());
    kernels::serial::dft_naive(v, out, dir);
    return out;
}

SpinorField transform_field(const SpinorField& field, Direction dir) {
    const std::size_t n = field.n_sites();
    const kernels::FftPlan plan(n);
    std::vector<cplx> amps(field.amps().begin(), field.amps().end());
    std::span<cplx> all(amps);
    kernels::omp::fft(plan, all.subspan(0, n), dir);
    kernels::omp::fft(plan, all.subspan(n, n), dir);
    return SpinorField(n, std::move(amps));
}

}  // namespace

std::vector<cplx> dft_forward(std::span<const cplx> component) { return transform(component, Direction::Forward); }
std::vector<cplx> dft_inverse(std::span<const cplx> component) { return transform(component, Direction::Inverse); }

std::vector<cplx> dft_forward_naive(std::span<const cplx> component) {
    return transform_naive(component, Direction::Forward);
}
std::vector<cplx> dft_inverse_naive(std::span<const cplx> component) {
    return transform_naive(component, Direction::Inverse);
}

SpinorField to_momentum(const SpinorField& field) { return transform_field(field, Direction::Forward); }
SpinorField to_position(const SpinorField& field) { return transform_field(field, Direction::Inverse); }

PhaseDiagonal phase_diagonal(PhaseSign sign, double dt, std::size_t n_sites) {
    require_site_count(n_sites);
    PhaseDiagonal d{n_sites, dt, sign, std::vector<cplx>(n_sites)};
    const double s = sign == PhaseSign::Plus ? 1.0 : -1.0;
    const auto n = static_cast<double>(n_sites);
    for (std::size_t j = 0; j < n_sites; ++j) {
        // Reduce j·δt modulo N first so integer δt lands exactly on the roots of unity.
        const double e = std::fmod(static_cast<double>(j) * dt, n);
        d.values[j] = std::polar(1.0, s * 2.0 * std::numbers::pi * e / n);
    }
    return d;
}

ModeGrid mode_grid(std::size_t n_sites) {
    require_site_count(n_sites);
    ModeGrid g{n_sites, std::vector<double>(n_sites)};
    for (std::size_t j = 0; j < n_sites; ++j) {
        const auto wrapped = 2 * j <= n_sites ? static_cast<double>(j) : static_cast<double>(j) - static_cast<double>(n_sites);
        g.k[j] = 2.0 * std::numbers::pi * wrapped / static_cast<double>(n_sites);
    }
    return g;
}

Mat2 exact_mode_propagator(double k, double mu, double dt) {
    const double e = std::hypot(k, mu);
    if (e == 0.0) return Mat2::Identity();
    Mat2 h;
    h << cplx(-k, 0.0), cplx(mu, 0.0), cplx(mu, 0.0), cplx(k, 0.0);
    return std::cos(e * dt) * Mat2::Identity() - cplx(0.0, std::sin(e * dt) / e) * h;
}

}  // namespace ctqw
