// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/evolution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctqw {

namespace {

constexpr std::size_t kMaxDenseSites = 64;

void require_match(const SpinorField& field, std::size_t n_sites) {
    if (field.n_sites() != n_sites) {
        throw std::invalid_argument("field has " + std::to_string(field.n_sites()) + " sites, operator expects " +
                                    std::to_string(n_sites));
    }
}

}  // namespace

void validate(const WalkParams& params) {
    require_site_count(params.n_sites);
    if (!std::isfinite(params.dt) || params.dt <= 0.0) {
        throw std::invalid_argument("dt must be finite and > 0");
    }
    if (!std::isfinite(params.mass)) throw std::invalid_argument("mass must be finite");
}

StepOperator::StepOperator(const WalkParams& params)
    : n_sites_(params.n_sites),
      dt_(params.dt),
      theta_(params.theta()),
      cos_half_(std::cos(0.5 * params.theta())),
      sin_half_(std::sin(0.5 * params.theta())),
      plan_((validate(params), params.n_sites)),
      minus_phase_(phase_diagonal(PhaseSign::Minus, params.dt, params.n_sites).values),
      plus_phase_(phase_diagonal(PhaseSign::Plus, params.dt, params.n_sites).values) {}

void StepOperator::apply_inplace(std::span<cplx> amps) const {
    if (amps.size() != 2 * n_sites_) throw std::invalid_argument("StepOperator: buffer size mismatch");
    auto r = amps.subspan(0, n_sites_);
    auto l = amps.subspan(n_sites_, n_sites_);
    kernels::omp::fft(plan_, r, kernels::Direction::Forward);
    kernels::omp::fft(plan_, l, kernels::Direction::Forward);
    kernels::omp::multiply_diagonal(l, plus_phase_);
    kernels::omp::apply_coin(r, l, cos_half_, sin_half_);
    kernels::omp::multiply_diagonal(r, minus_phase_);
    kernels::omp::fft(plan_, r, kernels::Direction::Inverse);
    kernels::omp::fft(plan_, l, kernels::Direction::Inverse);
}

SpinorField StepOperator::apply(const SpinorField& field) const {
    require_match(field, n_sites_);
    std::vector<cplx> amps(field.amps().begin(), field.amps().end());
    apply_inplace(amps);
    return SpinorField(n_sites_, std::move(amps));
}

Eigen::MatrixXcd StepOperator::dense() const {
    if (n_sites_ > kMaxDenseSites) throw std::invalid_argument("dense step operator limited to N <= 64");
    const std::size_t dim = 2 * n_sites_;
    Eigen::MatrixXcd u(dim, dim);
    std::vector<cplx> column(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(column.begin(), column.end(), cplx{});
        column[c] = 1.0;
        apply_inplace(column);
        for (std::size_t r = 0; r < dim; ++r) u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = column[r];
    }
    return u;
}

SpinorField step(const SpinorField& field, const WalkParams& params) {
    return StepOperator(params).apply(field);
}

SpinorField dca_step(const SpinorField& field, double theta) {
    std::vector<cplx> out(field.size());
    kernels::omp::dca_update(field.amps(), out, std::cos(0.5 * theta), std::sin(0.5 * theta));
    return SpinorField(field.n_sites(), std::move(out));
}

void evolve_streaming(const InitialCondition& ic, const WalkParams& params,
                      const std::function<void(std::size_t, const SpinorField&)>& visit) {
    const StepOperator op(params);
    SpinorField field = init_state(ic, params.n_sites);
    visit(0, field);
    for (std::size_t t = 1; t <= params.steps; ++t) {
        std::vector<cplx> amps = std::move(field).release();
        op.apply_inplace(amps);
        field = SpinorField(params.n_sites, std::move(amps));
        visit(t, field);
    }
}

std::vector<SpinorField> evolve(const InitialCondition& ic, const WalkParams& params) {
    std::vector<SpinorField> trajectory;
    trajectory.reserve(params.steps + 1);
    evolve_streaming(ic, params, [&](std::size_t, const SpinorField& f) { trajectory.push_back(f); });
    return trajectory;
}

Mat2 split_mode_operator(double k, double mu, double dt) {
    const double half = mu * dt;  // θ/2 with θ = 2μδt
    Mat2 coin;
    coin << cplx(std::cos(half), 0.0), cplx(0.0, -std::sin(half)), cplx(0.0, -std::sin(half)),
        cplx(std::cos(half), 0.0);
    Mat2 left = Mat2::Identity();
    left(0, 0) = std::polar(1.0, k * dt);
    Mat2 right = Mat2::Identity();
    right(1, 1) = std::polar(1.0, -k * dt);
    return left * coin * right;
}

double trotter_local_error(double k, double mu, double dt) {
    return (split_mode_operator(k, mu, dt) - exact_mode_propagator(k, mu, dt)).cwiseAbs().maxCoeff();
}

}  // namespace ctqw
