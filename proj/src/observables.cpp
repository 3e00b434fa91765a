// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/observables.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "ctqw/kernels.hpp"

namespace ctqw {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kNegativeEigTol = 1e-10;
constexpr std::size_t kMaxDenseExternal = 256;
constexpr std::size_t kMinWindow = 8;

double entropy_from_eigenvalues(std::span<const double> eigs) {
    double s = 0.0;
    for (double l : eigs) {
        if (l < -kNegativeEigTol) throw std::invalid_argument("density matrix has a negative eigenvalue");
        if (l > 0.0) s -= l * std::log2(l);
    }
    return std::max(s, 0.0);
}

}  // namespace

Mat2 reduced_internal(const SpinorField& field) {
    const auto r = field.component(Spin::R);
    const auto l = field.component(Spin::L);
    const double rr = kernels::omp::norm2(r);
    const double ll = kernels::omp::norm2(l);
    const cplx rl = kernels::omp::dot_conj(r, l);
    Mat2 rho;
    rho << cplx(rr, 0.0), rl, std::conj(rl), cplx(ll, 0.0);
    return rho;
}

Eigen::MatrixXcd reduced_external(const SpinorField& field) {
    const std::size_t n = field.n_sites();
    if (n > kMaxDenseExternal) throw std::invalid_argument("reduced_external limited to N <= 256");
    Eigen::MatrixXcd rho(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            rho(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) =
                field(Spin::R, x) * std::conj(field(Spin::R, y)) + field(Spin::L, x) * std::conj(field(Spin::L, y));
        }
    }
    return rho;
}

std::array<double, 2> hermitian_eigenvalues(const Mat2& rho) {
    const double a = rho(0, 0).real();
    const double d = rho(1, 1).real();
    const double half_gap = std::hypot(0.5 * (a - d), std::abs(rho(0, 1)));
    const double mean = 0.5 * (a + d);
    return {mean - half_gap, mean + half_gap};
}

double entropy_bits(const Mat2& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw std::invalid_argument("entropy_bits: matrix is not Hermitian");
    }
    const auto eigs = hermitian_eigenvalues(rho);
    return entropy_from_eigenvalues(eigs);
}

double entropy_bits(const Eigen::MatrixXcd& rho) {
    if (rho.rows() != rho.cols()) throw std::invalid_argument("entropy_bits: matrix is not square");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw std::invalid_argument("entropy_bits: matrix is not Hermitian");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return entropy_from_eigenvalues(std::span<const double>(ev.data(), static_cast<std::size_t>(ev.size())));
}

double velocity(const SpinorField& field) {
    const double rr = kernels::omp::norm2(field.component(Spin::R));
    const double ll = kernels::omp::norm2(field.component(Spin::L));
    return -(rr - ll);
}

std::vector<double> position_distribution(const SpinorField& field) {
    const std::size_t n = field.n_sites();
    std::vector<double> r(n), l(n);
    kernels::omp::abs2(field.component(Spin::R), r);
    kernels::omp::abs2(field.component(Spin::L), l);
    for (std::size_t x = 0; x < n; ++x) r[x] += l[x];
    return r;
}

ObservableSample observe(const SpinorField& field, double time) {
    const Mat2 rho = reduced_internal(field);
    return {time, entropy_bits(rho), rho(1, 1).real() - rho(0, 0).real(), norm(field)};
}

std::size_t default_transient_skip(std::size_t series_length) noexcept { return series_length / 10; }

ZbMetrics zb_metrics(std::span<const double> series, std::optional<std::size_t> transient_skip) {
    const std::size_t skip = transient_skip.value_or(default_transient_skip(series.size()));
    if (skip > series.size() || series.size() - skip < kMinWindow) {
        throw std::invalid_argument("zb_metrics: need at least 8 samples after the transient");
    }
    const auto window = series.subspan(skip);
    const std::size_t len = window.size();

    const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
    ZbMetrics m;
    m.window = len;
    m.amplitude = 0.5 * (*hi - *lo);

    double mean = 0.0;
    for (double v : window) mean += v;
    mean /= static_cast<double>(len);

    // Non-power-of-two windows, so a direct DFT; windows are a few thousand samples at most.
    double best = 0.0;
    for (std::size_t b = 1; b <= len / 2; ++b) {
        double re = 0.0, im = 0.0;
        for (std::size_t t = 0; t < len; ++t) {
            const double ang = 2.0 * std::numbers::pi * static_cast<double>((b * t) % len) / static_cast<double>(len);
            re += (window[t] - mean) * std::cos(ang);
            im -= (window[t] - mean) * std::sin(ang);
        }
        const double mag = std::hypot(re, im);
        if (mag > best) {
            best = mag;
            m.dominant_bin = b;
        }
    }
    // A flat window (up to roundoff) has no dominant frequency.
    if (m.amplitude < 1e-12) m.dominant_bin = 0;
    m.dominant_frequency = static_cast<double>(m.dominant_bin) / static_cast<double>(len);
    return m;
}

}  // namespace ctqw
