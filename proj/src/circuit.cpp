// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include "ctqw/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ctqw {

namespace {

constexpr int kMaxDenseQubits = 12;

int log2_exact(std::size_t n) {
    int b = 0;
    while ((std::size_t{1} << b) < n) ++b;
    return b;
}

void apply_gate(const Gate& g, std::span<cplx> psi, int n_qubits) {
    const std::size_t dim = psi.size();
    const auto bit = [n_qubits](int q) { return std::size_t{1} << (n_qubits - 1 - q); };
    const std::size_t tmask = bit(g.target);
    std::size_t cmask = 0, cwant = 0;
    if (g.control) {
        cmask = bit(g.control->qubit);
        cwant = g.control->state ? cmask : 0;
    }
    const auto active = [&](std::size_t i) { return (i & cmask) == cwant; };

    switch (g.kind) {
        case GateKind::Phase:
        case GateKind::CPhase: {
            const cplx ph = std::polar(1.0, g.angle);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & tmask) && active(i)) psi[i] *= ph;
            }
            return;
        }
        case GateKind::Swap: {
            const std::size_t m2 = bit(g.target2);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & tmask) && !(i & m2)) std::swap(psi[i], psi[(i ^ tmask) | m2]);
            }
            return;
        }
        default:
            break;
    }

    cplx u00, u01, u10, u11;
    if (g.kind == GateKind::H) {
        const double r = std::numbers::sqrt2 / 2.0;
        u00 = u01 = u10 = r;
        u11 = -r;
    } else if (g.kind == GateKind::X) {
        u00 = u11 = 0.0;
        u01 = u10 = 1.0;
    } else {  // RX
        const double c = std::cos(0.5 * g.angle);
        const double s = std::sin(0.5 * g.angle);
        u00 = u11 = c;
        u01 = u10 = cplx(0.0, -s);
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) || !active(i)) continue;
        const std::size_t j = i | tmask;
        const cplx a = psi[i];
        const cplx b = psi[j];
        psi[i] = u00 * a + u01 * b;
        psi[j] = u10 * a + u11 * b;
    }
}

}  // namespace

std::vector<int> Gate::qubits() const {
    std::vector<int> qs{target};
    if (kind == GateKind::Swap) qs.push_back(target2);
    if (control) qs.push_back(control->qubit);
    return qs;
}

QCircuit::QCircuit(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("circuit needs at least one qubit");
}

void QCircuit::append(const Gate& g) {
    const auto qs = g.qubits();
    for (int q : qs) {
        if (q < 0 || q >= n_qubits_) throw std::invalid_argument("gate qubit " + std::to_string(q) + " outside register");
    }
    auto sorted = qs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("gate qubits must be distinct");
    }
    if ((g.kind == GateKind::CPhase) != g.control.has_value()) {
        throw std::invalid_argument("only CPHASE carries a control, and it always does");
    }
    if (g.control && g.control->state != 0 && g.control->state != 1) {
        throw std::invalid_argument("control state must be 0 or 1");
    }
    if (!std::isfinite(g.angle)) throw std::invalid_argument("gate angle must be finite");
    gates_.push_back(g);
}

void QCircuit::append(const QCircuit& other) {
    if (other.n_qubits() > n_qubits_) throw std::invalid_argument("appended circuit is wider than the register");
    for (const auto& g : other.gates()) append(g);
}

QCircuit inverse(const QCircuit& circ) {
    QCircuit inv(circ.n_qubits());
    for (auto it = circ.gates().rbegin(); it != circ.gates().rend(); ++it) {
        Gate g = *it;
        g.angle = -g.angle;
        inv.append(g);
    }
    return inv;
}

QCircuit build_qft(int n_pos, int first, int n_qubits) {
    if (n_pos < 1) throw std::invalid_argument("build_qft: n_pos must be >= 1");
    if (n_qubits < 0) n_qubits = first + n_pos;
    QCircuit c(n_qubits);
    for (int i = 0; i < n_pos; ++i) {
        c.append(Gate::h(first + i));
        for (int k = i + 1; k < n_pos; ++k) {
            const double lambda = std::numbers::pi / static_cast<double>(std::size_t{1} << (k - i));
            c.append(Gate::cphase(first + k, first + i, lambda));
        }
    }
    for (int i = 0; i < n_pos / 2; ++i) c.append(Gate::swap(first + i, first + n_pos - 1 - i));
    return c;
}

QCircuit build_step_circuit(const WalkParams& params) {
    validate(params);
    const int n = log2_exact(params.n_sites);
    const double nd = static_cast<double>(params.n_sites);
    QCircuit c(n + 1);
    const QCircuit qft = build_qft(n, 1, n + 1);
    c.append(qft);
    // diag(ω^{jδt}) factorizes over the bits of j: qubit i carries weight 2^{n−i}.
    for (int i = 1; i <= n; ++i) {
        const double w = static_cast<double>(std::size_t{1} << (n - i));
        c.append(Gate::cphase(0, i, 2.0 * std::numbers::pi * w * params.dt / nd, 1));
    }
    c.append(Gate::rx(0, params.theta()));
    for (int i = 1; i <= n; ++i) {
        const double w = static_cast<double>(std::size_t{1} << (n - i));
        c.append(Gate::cphase(0, i, -2.0 * std::numbers::pi * w * params.dt / nd, 0));
    }
    c.append(inverse(qft));
    return c;
}

std::vector<cplx> simulate_statevector(const QCircuit& circ, std::span<const cplx> input) {
    const std::size_t dim = std::size_t{1} << circ.n_qubits();
    if (input.size() != dim) {
        throw std::invalid_argument("statevector length " + std::to_string(input.size()) + " does not match 2^" +
                                    std::to_string(circ.n_qubits()));
    }
    std::vector<cplx> psi(input.begin(), input.end());
    for (const auto& g : circ.gates()) apply_gate(g, psi, circ.n_qubits());
    return psi;
}

Eigen::MatrixXcd circuit_unitary(const QCircuit& circ) {
    if (circ.n_qubits() > kMaxDenseQubits) throw std::invalid_argument("circuit_unitary limited to 12 qubits");
    const std::size_t dim = std::size_t{1} << circ.n_qubits();
    Eigen::MatrixXcd u(dim, dim);
    std::vector<cplx> e(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(e.begin(), e.end(), cplx{});
        e[c] = 1.0;
        const auto col = simulate_statevector(circ, e);
        for (std::size_t r = 0; r < dim; ++r) u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = col[r];
    }
    return u;
}

CircuitStats depth_and_counts(const QCircuit& circ) {
    std::vector<std::size_t> layer(static_cast<std::size_t>(circ.n_qubits()), 0);
    CircuitStats st;
    for (const auto& g : circ.gates()) {
        const auto qs = g.qubits();
        std::size_t at = 0;
        for (int q : qs) at = std::max(at, layer[static_cast<std::size_t>(q)]);
        ++at;
        for (int q : qs) layer[static_cast<std::size_t>(q)] = at;
        st.depth = std::max(st.depth, at);
        (qs.size() == 1 ? st.one_qubit : st.two_qubit) += 1;
    }
    return st;
}

}  // namespace ctqw
