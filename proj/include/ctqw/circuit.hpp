// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file circuit.hpp
 * @brief Gate-level form of one walk step, plus a small statevector simulator.
 *
 * Register layout: qubit 0 is the spin, qubits 1..n hold the position with
 * qubit 1 as the most significant bit. Qubit q is bit (n_qubits − 1 − q) of
 * the basis index, so a statevector is laid out exactly like a SpinorField.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "ctqw/evolution.hpp"

namespace ctqw {

enum class GateKind { H, X, Phase, CPhase, RX, Swap };

struct Control {
    int qubit = 0;
    int state = 1;  // 0 for an anti-control
    bool operator==(const Control&) const = default;
};

struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int target2 = -1;  // second qubit of a SWAP
    std::optional<Control> control;
    double angle = 0.0;

    static Gate h(int q) { return {GateKind::H, q, -1, std::nullopt, 0.0}; }
    static Gate x(int q) { return {GateKind::X, q, -1, std::nullopt, 0.0}; }
    static Gate phase(int q, double lambda) { return {GateKind::Phase, q, -1, std::nullopt, lambda}; }
    static Gate cphase(int ctrl, int tgt, double lambda, int ctrl_state = 1) {
        return {GateKind::CPhase, tgt, -1, Control{ctrl, ctrl_state}, lambda};
    }
    static Gate rx(int q, double theta) { return {GateKind::RX, q, -1, std::nullopt, theta}; }
    static Gate swap(int a, int b) { return {GateKind::Swap, a, b, std::nullopt, 0.0}; }

    /// Every qubit the gate touches, controls included.
    [[nodiscard]] std::vector<int> qubits() const;

    bool operator==(const Gate&) const = default;
};

class QCircuit {
public:
    explicit QCircuit(int n_qubits);

    [[nodiscard]] int n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate>& gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }

    /// Throws std::invalid_argument for out-of-register or repeated qubits, a
    /// control on anything but CPHASE, a CPHASE without one, or a non-finite angle.
    void append(const Gate& g);
    void append(const QCircuit& other);

    bool operator==(const QCircuit&) const = default;

private:
    int n_qubits_;
    std::vector<Gate> gates_;
};

/// Gates reversed, angles negated.
[[nodiscard]] QCircuit inverse(const QCircuit& circ);

/**
 * QFT over n_pos qubits starting at `first`, in a register of `n_qubits`
 * (defaults to exactly the transform's qubits). H and controlled-phase
 * ladder per qubit, then the reversal SWAP network; the unitary is
 * F[j,l] = ω^{jl}/√N on the big-endian sub-register.
 */
[[nodiscard]] QCircuit build_qft(int n_pos, int first = 0, int n_qubits = -1);

/**
 * One walk step: QFT, spin-controlled phases diag(I, Q₊^{δt}), RX(θ) on the
 * spin, anti-controlled phases diag(Q₋^{δt}, I), inverse QFT.
 */
[[nodiscard]] QCircuit build_step_circuit(const WalkParams& params);

[[nodiscard]] std::vector<cplx> simulate_statevector(const QCircuit& circ, std::span<const cplx> input);

/// Column-by-column dense unitary; n_qubits <= 12.
[[nodiscard]] Eigen::MatrixXcd circuit_unitary(const QCircuit& circ);

struct CircuitStats {
    std::size_t depth = 0;
    std::size_t one_qubit = 0;
    std::size_t two_qubit = 0;
};

/// ASAP layering: a gate goes one layer after the latest layer of any qubit it touches.
[[nodiscard]] CircuitStats depth_and_counts(const QCircuit& circ);

/**
 * OpenQASM 2.0 text over {h, x, u1, cu1, rx, swap}. Anti-controls are
 * lowered to an X-conjugated cu1. Angles are printed with 17 significant
 * digits.
 */
[[nodiscard]] std::string export_qasm(const QCircuit& circ);

/**
 * Reads back the subset export_qasm writes. An `x c; cu1 c,t; x c;` triple
 * is folded back into an anti-controlled phase. Throws std::invalid_argument
 * on anything outside the subset.
 */
[[nodiscard]] QCircuit parse_qasm(std::string_view text);

}  // namespace ctqw
