// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "qgsynth/graphs.hpp"

namespace qgsynth {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>;  // row-major [[a,b],[c,d]]

enum class GateKind { R, Rz, Ry, H, S, Sdg, X, U2, CX, Swap };

struct Gate {
    GateKind kind = GateKind::X;
    int q0 = 0;   // target for 1q gates, control for CNOT
    int q1 = -1;  // CNOT target, second SWAP qubit
    double theta = 0.0;
    Mat2 u{};     // only for U2

    bool two_qubit() const { return kind == GateKind::CX || kind == GateKind::Swap; }
};

Mat2 gate_matrix(const Gate& g);
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_adjoint(const Mat2& a);

class Circuit {
public:
    Circuit() = default;
    explicit Circuit(int num_qubits, int ancilla = 0) : num_qubits(num_qubits), ancilla(ancilla) {}

    int num_qubits = 0;
    int ancilla = 0;
    std::vector<Gate> gates;

    Circuit& r(int q, double t) { return push({GateKind::R, q, -1, t, {}}); }
    Circuit& rz(int q, double t) { return push({GateKind::Rz, q, -1, t, {}}); }
    Circuit& ry(int q, double t) { return push({GateKind::Ry, q, -1, t, {}}); }
    Circuit& h(int q) { return push({GateKind::H, q, -1, 0.0, {}}); }
    Circuit& s(int q) { return push({GateKind::S, q, -1, 0.0, {}}); }
    Circuit& sdg(int q) { return push({GateKind::Sdg, q, -1, 0.0, {}}); }
    Circuit& x(int q) { return push({GateKind::X, q, -1, 0.0, {}}); }
    Circuit& u2(int q, const Mat2& m) { return push({GateKind::U2, q, -1, 0.0, m}); }
    Circuit& cx(int c, int t) { return push({GateKind::CX, c, t, 0.0, {}}); }
    Circuit& swap(int a, int b) { return push({GateKind::Swap, a, b, 0.0, {}}); }
    // SWAP realized directly as three CNOTs.
    Circuit& swap3(int a, int b) { return cx(a, b).cx(b, a).cx(a, b); }

    Circuit& push(const Gate& g);
    Circuit& append(const Circuit& other);
    // Appends other with qubit i of other mapped to map[i].
    Circuit& append_mapped(const Circuit& other, const std::vector<int>& map);

    std::size_t size() const { return gates.size(); }
    bool empty() const { return gates.empty(); }
};

Circuit expand_macros(const Circuit& c);

struct Metrics {
    int depth = 0;
    long long size = 0;
    long long two_qubit = 0;
};

Metrics metrics(const Circuit& c);
int cnot_count(const Circuit& c);

struct Violation {
    std::size_t gate_index = 0;
    int u = 0;
    int v = 0;
};

std::vector<Violation> validate_connectivity(const Circuit& c, const Graph& g);

struct Layer {
    bool single_qubit = true;
    std::vector<Gate> gates;
};

struct LayeredCircuit {
    int num_qubits = 0;
    std::vector<Layer> layers;  // layers[0] is layer 1 (single-qubit), layers[1] is layer 2 (CNOT), ...
};

LayeredCircuit to_layered_form(const Circuit& c);
Circuit from_layered_form(const LayeredCircuit& lc);

Gate gate_inverse(const Gate& g);
Circuit compose_inverse(const Circuit& c);

std::string encode_circuit(const Circuit& c);
Circuit decode_circuit(const std::string& text);

}  // namespace qgsynth
