// Copyright 2026 The ctqw Authors
// SPDX-License-Identifier: Apache-2.0

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctqw/circuit.hpp"
#include "ctqw/parse.hpp"

namespace ctqw {

namespace {

std::string qref(int q) { return "q[" + std::to_string(q) + "]"; }

struct Instruction {
    std::string name;
    std::string arg;  // raw angle text, empty when absent
    std::vector<int> qubits;
};

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("qasm line " + std::to_string(line) + ": " + msg);
}

std::string strip(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_qubit(std::string tok, std::size_t line) {
    tok = strip(tok);
    if (tok.size() < 4 || tok.rfind("q[", 0) != 0 || tok.back() != ']') parse_error(line, "bad qubit '" + tok + "'");
    int q = -1;
    const char* b = tok.data() + 2;
    const char* e = tok.data() + tok.size() - 1;
    auto [ptr, ec] = std::from_chars(b, e, q);
    if (ec != std::errc() || ptr != e || q < 0) parse_error(line, "bad qubit '" + tok + "'");
    return q;
}

Instruction parse_instruction(const std::string& stmt, std::size_t line) {
    Instruction ins;
    std::size_t pos = 0;
    while (pos < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[pos])) || stmt[pos] == '_')) ++pos;
    ins.name = stmt.substr(0, pos);
    if (ins.name.empty()) parse_error(line, "expected a gate name");
    if (pos < stmt.size() && stmt[pos] == '(') {
        const auto close = stmt.find(')', pos);
        if (close == std::string::npos) parse_error(line, "unbalanced parenthesis");
        ins.arg = strip(stmt.substr(pos + 1, close - pos - 1));
        pos = close + 1;
    }
    std::stringstream rest(stmt.substr(pos));
    std::string tok;
    while (std::getline(rest, tok, ',')) ins.qubits.push_back(parse_qubit(tok, line));
    return ins;
}

double angle_of(const Instruction& ins, std::size_t line) {
    if (ins.arg.empty()) parse_error(line, ins.name + " needs an angle");
    try {
        return parse_real(ins.arg);
    } catch (const std::invalid_argument& e) {
        parse_error(line, e.what());
    }
}

void expect_arity(const Instruction& ins, std::size_t n, std::size_t line) {
    if (ins.qubits.size() != n) parse_error(line, ins.name + " takes " + std::to_string(n) + " qubit(s)");
}

}  // namespace

std::string export_qasm(const QCircuit& circ) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circ.n_qubits() << "];\n";
    for (const auto& g : circ.gates()) {
        switch (g.kind) {
            case GateKind::H:
                out << "h " << qref(g.target) << ";\n";
                break;
            case GateKind::X:
                out << "x " << qref(g.target) << ";\n";
                break;
            case GateKind::Phase:
                out << "u1(" << format_17g(g.angle) << ") " << qref(g.target) << ";\n";
                break;
            case GateKind::RX:
                out << "rx(" << format_17g(g.angle) << ") " << qref(g.target) << ";\n";
                break;
            case GateKind::Swap:
                out << "swap " << qref(g.target) << "," << qref(g.target2) << ";\n";
                break;
            case GateKind::CPhase: {
                const int c = g.control->qubit;
                if (g.control->state == 0) out << "x " << qref(c) << ";\n";
                out << "cu1(" << format_17g(g.angle) << ") " << qref(c) << "," << qref(g.target) << ";\n";
                if (g.control->state == 0) out << "x " << qref(c) << ";\n";
                break;
            }
        }
    }
    return out.str();
}

QCircuit parse_qasm(std::string_view text) {
    std::vector<std::pair<Instruction, std::size_t>> body;
    int n_qubits = -1;
    bool saw_header = false;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto c = raw.find("//"); c != std::string::npos) raw.erase(c);
        std::stringstream stmts(raw);
        std::string stmt;
        while (std::getline(stmts, stmt, ';')) {
            stmt = strip(stmt);
            if (stmt.empty()) continue;
            if (stmt.rfind("OPENQASM", 0) == 0) {
                if (strip(stmt.substr(8)) != "2.0") parse_error(line, "only OpenQASM 2.0 is supported");
                saw_header = true;
            } else if (stmt.rfind("include", 0) == 0) {
                continue;
            } else if (stmt.rfind("qreg", 0) == 0) {
                if (n_qubits >= 0) parse_error(line, "only one quantum register is supported");
                const std::string decl = strip(stmt.substr(4));
                const int q = parse_qubit(decl, line);
                n_qubits = q;
            } else {
                body.emplace_back(parse_instruction(stmt, line), line);
            }
        }
    }
    if (!saw_header) parse_error(line, "missing OPENQASM header");
    if (n_qubits < 1) parse_error(line, "missing qreg declaration");

    QCircuit circ(n_qubits);
    for (std::size_t i = 0; i < body.size(); ++i) {
        const auto& [ins, ln] = body[i];
        try {
            if (ins.name == "h") {
                expect_arity(ins, 1, ln);
                circ.append(Gate::h(ins.qubits[0]));
            } else if (ins.name == "x") {
                expect_arity(ins, 1, ln);
                // x c; cu1(λ) c,t; x c;  →  anti-controlled phase
                if (i + 2 < body.size()) {
                    const auto& mid = body[i + 1].first;
                    const auto& post = body[i + 2].first;
                    if (mid.name == "cu1" && mid.qubits.size() == 2 && mid.qubits[0] == ins.qubits[0] &&
                        post.name == "x" && post.qubits == ins.qubits) {
                        circ.append(Gate::cphase(mid.qubits[0], mid.qubits[1], angle_of(mid, body[i + 1].second), 0));
                        i += 2;
                        continue;
                    }
                }
                circ.append(Gate::x(ins.qubits[0]));
            } else if (ins.name == "u1") {
                expect_arity(ins, 1, ln);
                circ.append(Gate::phase(ins.qubits[0], angle_of(ins, ln)));
            } else if (ins.name == "cu1") {
                expect_arity(ins, 2, ln);
                circ.append(Gate::cphase(ins.qubits[0], ins.qubits[1], angle_of(ins, ln)));
            } else if (ins.name == "rx") {
                expect_arity(ins, 1, ln);
                circ.append(Gate::rx(ins.qubits[0], angle_of(ins, ln)));
            } else if (ins.name == "swap") {
                expect_arity(ins, 2, ln);
                circ.append(Gate::swap(ins.qubits[0], ins.qubits[1]));
            } else {
                parse_error(ln, "unsupported gate '" + ins.name + "'");
            }
        } catch (const std::invalid_argument& e) {
            const std::string msg = e.what();
            if (msg.rfind("qasm line", 0) == 0) throw;
            parse_error(ln, msg);
        }
    }
    return circ;
}

}  // namespace ctqw
