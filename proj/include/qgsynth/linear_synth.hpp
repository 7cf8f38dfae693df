// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"

namespace qgsynth {

// Square bit matrix, n <= 64. rows[i] bit j is M[i][j]; y_i = XOR_j M[i][j] x_j.
struct F2Matrix {
    int n = 0;
    std::vector<std::uint64_t> rows;

    static F2Matrix identity(int n);
    bool get(int i, int j) const { return (rows[i] >> j) & 1U; }
    void set(int i, int j, bool v);
    std::uint64_t apply(std::uint64_t x) const;  // bit j of x is x_j
    F2Matrix operator*(const F2Matrix& o) const;
    bool operator==(const F2Matrix& o) const { return n == o.n && rows == o.rows; }
    int rank() const;
    bool invertible() const { return rank() == n; }
    F2Matrix inverse() const;
};

F2Matrix random_invertible(int n, std::uint64_t seed);

Circuit route_cnot(const Graph& g, int u, int v);
// Emits the routed CNOT into an existing circuit.
void emit_cnot(Circuit& c, const Graph& g, int u, int v);
// CNOT from p.front() to p.back() using only the consecutive pairs of p.
void emit_cnot_along(Circuit& c, const std::vector<int>& p);
// Replaces every off-edge CNOT by its routed form; SWAP macros are expanded first.
Circuit route_circuit(const Graph& g, const Circuit& c);

Circuit fanout(const Graph& g, int control, const std::vector<int>& targets);

struct ExpanderCascade;
Circuit fanout_cascade(const Graph& g, int control, const ExpanderCascade& cascade);

// M acts on the listed qubits (M index i <-> qubits[i]); other qubits are restored.
Circuit synth_linear_f2_on(const Graph& g, const std::vector<int>& qubits, const F2Matrix& M);
Circuit synth_linear_f2(const Graph& g, const F2Matrix& M);

// perm[i] is the destination of the content of qubit i.
Circuit synth_permutation(const Graph& g, const std::vector<int>& perm);
// Odd-even transposition network along a path given by its vertex order.
Circuit synth_permutation_on_path(const Graph& g, const std::vector<int>& path_order,
                                  const std::vector<int>& perm);

enum class CopyTopology { Path, Grid, Tree };

// Staggered layers of the path copy pipeline: n + t - 1 layers of disjoint CNOTs.
std::vector<std::vector<Gate>> copy_pipeline_schedule(const std::vector<int>& source,
                                                     const std::vector<std::vector<int>>& sinks);
// Unconstrained copy circuit; CNOT endpoints may be non-adjacent.
Circuit copy_register_logical(int num_qubits, const std::vector<int>& source,
                              const std::vector<std::vector<int>>& sinks, CopyTopology topology,
                              const Graph* g = nullptr);
Circuit copy_register(const Graph& g, const std::vector<int>& source, const std::vector<std::vector<int>>& sinks,
                      CopyTopology topology);

// Flips target iff the controls read `pattern` ('0'/'1' per control). Scratch qubits must be |0>.
Circuit multi_controlled_x(const Graph& g, const std::vector<int>& controls, const std::string& pattern,
                           int target, const std::vector<int>& scratch);
void emit_toffoli(Circuit& c, const Graph& g, int a, int b, int t);

}  // namespace qgsynth
