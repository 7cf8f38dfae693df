// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/targets.hpp"

namespace qgsynth {

using StateVector = std::vector<cplx>;

enum class KernelMode { Parallel, Serial };

constexpr int kDenseStateCap = 24;
constexpr int kDenseUnitaryCap = 12;
constexpr int kF2Cap = 64;

// Basis index of qubit q in an N-qubit register: qubit 0 is the most significant bit.
inline std::uint64_t qubit_bit(int num_qubits, int q) { return std::uint64_t{1} << (num_qubits - 1 - q); }

void apply_gate(StateVector& psi, int num_qubits, const Gate& g, KernelMode mode = KernelMode::Parallel);
void apply_circuit(StateVector& psi, const Circuit& c, KernelMode mode = KernelMode::Parallel);

StateVector simulate_state(const Circuit& c, KernelMode mode = KernelMode::Parallel);
StateVector simulate_basis(const Circuit& c, std::uint64_t x, KernelMode mode = KernelMode::Parallel);
// Row-major 2^N x 2^N matrix.
std::vector<cplx> simulate_unitary(const Circuit& c);

// Sparse amplitude map for registers beyond the dense cap.
struct SparseState {
    int num_qubits = 0;
    std::unordered_map<std::uint64_t, cplx> amp;
};

SparseState simulate_sparse(const Circuit& c, std::uint64_t x, std::size_t max_support = std::size_t{1} << 22);
void apply_gate_sparse(SparseState& s, const Gate& g);

// Circuits of X, CNOT, SWAP and diagonal single-qubit gates map basis states to
// basis states with a phase.
bool is_monomial(const Circuit& c);
struct MonomialResult {
    std::uint64_t index = 0;
    cplx phase{1.0, 0.0};
};
MonomialResult simulate_monomial(const Circuit& c, std::uint64_t x);

bool is_f2(const Circuit& c);
std::uint64_t f2_apply(const Circuit& c, std::uint64_t x);

struct VerifyResult {
    double residual = 0.0;
    bool ancilla_restored = true;
    double ancilla_leak = 0.0;
};

// Data qubits are the leading n = num_qubits - m qubits, ancilla the trailing m.
VerifyResult verify_target(const Circuit& c, const TargetSpec& target, int m);

struct SynthesisReport {
    Metrics metrics;
    std::vector<Violation> violations;
    std::optional<double> residual;  // empty when not simulated
    bool ancilla_restored = true;
    std::string backend;
    std::vector<std::string> notes;
};

SynthesisReport assemble_report(const Circuit& c, const Graph& g, const TargetSpec* target, int m,
                                const std::string& backend = "");
std::string encode_report(const SynthesisReport& r);

}  // namespace qgsynth
