// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/amplitudes.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ctqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTol = 1e-12;

double offset(long q, double dt, PhaseSign sign) {
    return sign == PhaseSign::Plus ? dt - static_cast<double>(q) : dt + static_cast<double>(q);
}

// sin(πx) with the argument reduced mod 2 first; exact zeros at integers.
double sin_pi(double x) {
    const double r = std::fmod(x, 2.0);
    if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
    return std::sin(kPi * r);
}

}  // namespace

cplx transition_amplitude(long q, double dt, std::size_t n_sites, PhaseSign sign) {
    require_site_count(n_sites);
    const double n = static_cast<double>(n_sites);
    const double a = offset(q, dt, sign);
    const double turns = a / n;
    if (std::abs(turns - std::round(turns)) * n < kSingularTol) return {1.0, 0.0};
    // 1 − e^{iφ} = −2i·sin(φ/2)·e^{iφ/2}, so the ratio is a Dirichlet kernel
    // times the phase e^{iπa(N−1)/N}. This form avoids cancellation near the
    // removable point.
    const double magnitude = sin_pi(a) / (n * sin_pi(turns));
    const double phase = kPi * std::fmod(a * (n - 1.0) / n, 2.0);
    return magnitude * cplx(std::cos(phase), std::sin(phase));
}

cplx transition_amplitude_bruteforce(long q, double dt, std::size_t n_sites, PhaseSign sign) {
    require_site_count(n_sites);
    const double n = static_cast<double>(n_sites);
    const double a = offset(q, dt, sign);
    cplx acc{0.0, 0.0};
    for (std::size_t j = 0; j < n_sites; ++j) {
        const double e = std::fmod(static_cast<double>(j) * a, n);
        acc += std::polar(1.0, 2.0 * kPi * e / n);
    }
    return acc / n;
}

double infinite_limit_prob(long q, double dt, PhaseSign sign) {
    const double a = offset(q, dt, sign);
    if (std::abs(a) < kSingularTol) return 1.0;
    // (1 − cos 2πa)/(2π²a²) = sin²(πa)/(πa)²
    const double s = sin_pi(a);
    return s * s / (kPi * kPi * a * a);
}

AmplitudeProfile emit_profile(std::span<const double> dts, std::size_t n_sites, PhaseSign sign) {
    require_site_count(n_sites);
    const long half = static_cast<long>(n_sites / 2);
    return emit_profile(dts, n_sites, -half + 1, half, sign);
}

AmplitudeProfile emit_profile(std::span<const double> dts, std::size_t n_sites, long q_min, long q_max,
                              PhaseSign sign) {
    require_site_count(n_sites);
    if (q_min > q_max) throw std::invalid_argument("emit_profile: q_min > q_max");
    AmplitudeProfile profile{n_sites, sign, {}};
    profile.entries.reserve(dts.size() * static_cast<std::size_t>(q_max - q_min + 1));
    for (double dt : dts) {
        for (long q = q_min; q <= q_max; ++q) {
            const cplx amp = transition_amplitude(q, dt, n_sites, sign);
            profile.entries.push_back({dt, q, amp, std::norm(amp), infinite_limit_prob(q, dt, sign)});
        }
    }
    return profile;
}

}  // namespace ctqw
