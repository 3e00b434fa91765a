// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctqw::kernels {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_same_size(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(std::string(what) + ": length mismatch");
}

std::size_t chunk_count(std::size_t n) { return (n + kReductionChunk - 1) / kReductionChunk; }

// Per-chunk partial sums; combined in index order by the callers.
double chunk_norm2(std::span<const cplx> v, std::size_t c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(v.size(), lo + kReductionChunk);
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += std::norm(v[i]);
    return acc;
}

cplx chunk_dot_conj(std::span<const cplx> a, std::span<const cplx> b, std::size_t c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(a.size(), lo + kReductionChunk);
    double re = 0.0, im = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
        const cplx p = a[i] * std::conj(b[i]);
        re += p.real();
        im += p.imag();
    }
    return {re, im};
}

inline void butterfly(cplx* data, std::size_t lo, std::size_t hi, cplx w) {
    const cplx t = w * data[hi];
    data[hi] = data[lo] - t;
    data[lo] += t;
}

inline cplx stage_twiddle(const FftPlan& plan, std::size_t k, std::size_t stride, Direction dir) {
    const cplx w = plan.twiddles()[k * stride];
    return dir == Direction::Forward ? w : std::conj(w);
}

void check_plan(const FftPlan& plan, std::span<cplx> data) {
    if (data.size() != plan.size()) throw std::invalid_argument("fft: data length does not match plan");
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
    if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("FftPlan: length must be a power of two");
    twiddles_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        twiddles_[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
    }
    bitrev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1U) << (bits - 1 - b);
        bitrev_[i] = r;
    }
}

int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// ---------------------------------------------------------------------------
// serial reference
// ---------------------------------------------------------------------------

namespace serial {

void dft_naive(std::span<const cplx> in, std::span<cplx> out, Direction dir) {
    check_same_size(in.size(), out.size(), "dft_naive");
    const std::size_t n = in.size();
    const double sign = dir == Direction::Forward ? 1.0 : -1.0;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j) {
        cplx acc{0.0, 0.0};
        for (std::size_t l = 0; l < n; ++l) {
            const auto e = static_cast<double>((j * l) % n);
            acc += std::polar(1.0, sign * kTwoPi * e / static_cast<double>(n)) * in[l];
        }
        out[j] = acc * scale;
    }
}

void fft(const FftPlan& plan, std::span<cplx> data, Direction dir) {
    check_plan(plan, data);
    const std::size_t n = plan.size();
    const auto rev = plan.bit_reversal();
    for (std::size_t i = 0; i < n; ++i) {
        if (i < rev[i]) std::swap(data[i], data[rev[i]]);
    }
    for (std::size_t m = 2; m <= n; m <<= 1) {
        const std::size_t h = m / 2;
        const std::size_t stride = n / m;
        for (std::size_t start = 0; start < n; start += m) {
            for (std::size_t k = 0; k < h; ++k) {
                butterfly(data.data(), start + k, start + k + h, stage_twiddle(plan, k, stride, dir));
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& v : data) v *= scale;
}

void multiply_diagonal(std::span<cplx> v, std::span<const cplx> d) {
    check_same_size(v.size(), d.size(), "multiply_diagonal");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] *= d[i];
}

void apply_coin(std::span<cplx> upper, std::span<cplx> lower, double c, double s) {
    check_same_size(upper.size(), lower.size(), "apply_coin");
    const cplx mis{0.0, -s};
    for (std::size_t i = 0; i < upper.size(); ++i) {
        const cplx u = upper[i];
        const cplx l = lower[i];
        upper[i] = c * u + mis * l;
        lower[i] = mis * u + c * l;
    }
}

void dca_update(std::span<const cplx> in, std::span<cplx> out, double c, double s) {
    check_same_size(in.size(), out.size(), "dca_update");
    const std::size_t n = in.size() / 2;
    const cplx mis{0.0, -s};
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t right = x + 1 == n ? 0 : x + 1;
        const std::size_t left = x == 0 ? n - 1 : x - 1;
        out[x] = c * in[right] + mis * in[n + x];
        out[n + x] = c * in[n + left] + mis * in[x];
    }
}

double norm2(std::span<const cplx> v) {
    double total = 0.0;
    for (std::size_t c = 0; c < chunk_count(v.size()); ++c) total += chunk_norm2(v, c);
    return total;
}

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
    check_same_size(a.size(), b.size(), "dot_conj");
    cplx total{0.0, 0.0};
    for (std::size_t c = 0; c < chunk_count(a.size()); ++c) total += chunk_dot_conj(a, b, c);
    return total;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
    check_same_size(v.size(), out.size(), "abs2");
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::norm(v[i]);
}

}  // namespace serial

// ---------------------------------------------------------------------------
// OpenMP
// ---------------------------------------------------------------------------

namespace omp {

void fft(const FftPlan& plan, std::span<cplx> data, Direction dir) {
    check_plan(plan, data);
    const std::size_t n = plan.size();
    const auto rev = plan.bit_reversal();
    const bool par = n >= kParallelMin;
    cplx* a = data.data();

#pragma omp parallel if (par)
    {
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < n; ++i) {
            if (i < rev[i]) std::swap(a[i], a[rev[i]]);
        }
        for (std::size_t m = 2; m <= n; m <<= 1) {
            const std::size_t h = m / 2;
            const std::size_t stride = n / m;
            // One iteration per butterfly; the implicit barrier separates stages.
#pragma omp for schedule(static)
            for (std::size_t b = 0; b < n / 2; ++b) {
                const std::size_t k = b % h;
                const std::size_t lo = (b / h) * m + k;
                butterfly(a, lo, lo + h, stage_twiddle(plan, k, stride, dir));
            }
        }
        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
#pragma omp for schedule(static)
        for (std::size_t i = 0; i < n; ++i) a[i] *= scale;
    }
}

void multiply_diagonal(std::span<cplx> v, std::span<const cplx> d) {
    check_same_size(v.size(), d.size(), "multiply_diagonal");
    const std::size_t n = v.size();
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
    for (std::size_t i = 0; i < n; ++i) v[i] *= d[i];
}

void apply_coin(std::span<cplx> upper, std::span<cplx> lower, double c, double s) {
    check_same_size(upper.size(), lower.size(), "apply_coin");
    const std::size_t n = upper.size();
    const cplx mis{0.0, -s};
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
    for (std::size_t i = 0; i < n; ++i) {
        const cplx u = upper[i];
        const cplx l = lower[i];
        upper[i] = c * u + mis * l;
        lower[i] = mis * u + c * l;
    }
}

void dca_update(std::span<const cplx> in, std::span<cplx> out, double c, double s) {
    check_same_size(in.size(), out.size(), "dca_update");
    const std::size_t n = in.size() / 2;
    const cplx mis{0.0, -s};
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
    for (std::size_t x = 0; x < n; ++x) {
        const std::size_t right = x + 1 == n ? 0 : x + 1;
        const std::size_t left = x == 0 ? n - 1 : x - 1;
        out[x] = c * in[right] + mis * in[n + x];
        out[n + x] = c * in[n + left] + mis * in[x];
    }
}

double norm2(std::span<const cplx> v) {
    const std::size_t chunks = chunk_count(v.size());
    std::vector<double> partial(chunks);
#pragma omp parallel for schedule(static) if (v.size() >= kParallelMin)
    for (std::size_t c = 0; c < chunks; ++c) partial[c] = chunk_norm2(v, c);
    double total = 0.0;
    for (double p : partial) total += p;
    return total;
}

cplx dot_conj(std::span<const cplx> a, std::span<const cplx> b) {
    check_same_size(a.size(), b.size(), "dot_conj");
    const std::size_t chunks = chunk_count(a.size());
    std::vector<cplx> partial(chunks);
#pragma omp parallel for schedule(static) if (a.size() >= kParallelMin)
    for (std::size_t c = 0; c < chunks; ++c) partial[c] = chunk_dot_conj(a, b, c);
    cplx total{0.0, 0.0};
    for (const cplx& p : partial) total += p;
    return total;
}

void abs2(std::span<const cplx> v, std::span<double> out) {
    check_same_size(v.size(), out.size(), "abs2");
    const std::size_t n = v.size();
#pragma omp parallel for schedule(static) if (n >= kParallelMin)
    for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(v[i]);
}

}  // namespace omp

}  // namespace ctqw::kernels
