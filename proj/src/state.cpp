// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ctqw/kernels.hpp"

namespace ctqw {

void require_site_count(std::size_t n) {
    if (n < 2 || !is_power_of_two(n)) {
        throw std::invalid_argument("n_sites must be a power of two >= 2, got " + std::to_string(n));
    }
}

long display_coord(std::size_t x, std::size_t n_sites) {
    if (x >= n_sites) {
        throw std::out_of_range("site " + std::to_string(x) + " outside [0, " + std::to_string(n_sites) + ")");
    }
    const auto sx = static_cast<long>(x);
    const auto n = static_cast<long>(n_sites);
    return 2 * sx <= n ? sx : sx - n;
}

std::size_t site_from_display(long coord, std::size_t n_sites) {
    const auto n = static_cast<long>(n_sites);
    if (2 * coord <= -n || 2 * coord > n) {
        throw std::out_of_range("display coordinate " + std::to_string(coord) + " outside (-N/2, N/2]");
    }
    return static_cast<std::size_t>(coord < 0 ? coord + n : coord);
}

SpinorField::SpinorField(std::size_t n_sites, std::vector<cplx> amps) : n_sites_(n_sites), amps_(std::move(amps)) {
    require_site_count(n_sites_);
    if (amps_.size() != 2 * n_sites_) {
        throw std::invalid_argument("SpinorField needs 2N = " + std::to_string(2 * n_sites_) + " amplitudes, got " +
                                    std::to_string(amps_.size()));
    }
}

SpinorField SpinorField::zeros(std::size_t n_sites) {
    return SpinorField(n_sites, std::vector<cplx>(2 * n_sites));
}

namespace {

std::vector<double> position_profile(const std::variant<SitePosition, GaussianPosition>& pos, std::size_t n) {
    std::vector<double> profile(n, 0.0);
    if (const auto* site = std::get_if<SitePosition>(&pos)) {
        if (site->site >= n) {
            throw std::invalid_argument("initial site " + std::to_string(site->site) + " outside [0, " +
                                        std::to_string(n) + ")");
        }
        profile[site->site] = 1.0;
        return profile;
    }
    const auto& g = std::get<GaussianPosition>(pos);
    if (!(g.sigma > 0.0) || !std::isfinite(g.sigma) || !std::isfinite(g.center)) {
        throw std::invalid_argument("gaussian profile needs finite center and sigma > 0");
    }
    const double nd = static_cast<double>(n);
    const double c = std::fmod(std::fmod(g.center, nd) + nd, nd);
    double total = 0.0;
    for (std::size_t x = 0; x < n; ++x) {
        double d = std::abs(static_cast<double>(x) - c);
        d = std::min(d, nd - d);  // periodic distance
        profile[x] = std::exp(-d * d / (4.0 * g.sigma * g.sigma));
        total += profile[x] * profile[x];
    }
    const double inv = 1.0 / std::sqrt(total);
    for (auto& v : profile) v *= inv;
    return profile;
}

}  // namespace

SpinorField init_state(const InitialCondition& ic, std::size_t n_sites) {
    require_site_count(n_sites);
    const double spin_norm = std::sqrt(std::norm(ic.spin.r) + std::norm(ic.spin.l));
    if (!(spin_norm > 0.0) || !std::isfinite(spin_norm)) {
        throw std::invalid_argument("initial spin vector must be nonzero and finite");
    }
    const cplx cr = ic.spin.r / spin_norm;
    const cplx cl = ic.spin.l / spin_norm;
    const auto profile = position_profile(ic.position, n_sites);

    std::vector<cplx> amps(2 * n_sites);
    for (std::size_t x = 0; x < n_sites; ++x) {
        amps[flat_index(Spin::R, x, n_sites)] = cr * profile[x];
        amps[flat_index(Spin::L, x, n_sites)] = cl * profile[x];
    }
    return SpinorField(n_sites, std::move(amps));
}

double norm(std::span<const cplx> amps) {
    return std::sqrt(kernels::omp::norm2(amps));
}

double norm(const SpinorField& field) {
    return norm(field.amps());
}

}  // namespace ctqw
