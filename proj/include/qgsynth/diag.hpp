// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/gray_walsh.hpp"
#include "qgsynth/sim.hpp"

namespace qgsynth {

// Strings t are r_t-bit integers with target 1 as the most significant bit.
struct IndependentCover {
    int r_t = 0;
    std::vector<std::vector<std::uint64_t>> sets;  // sets[k][i] = t_i^{(k+1)}
    std::vector<std::vector<char>> fresh;          // t_i^{(k+1)} first appears in set k+1

    int length() const { return static_cast<int>(sets.size()); }
};

IndependentCover independent_cover(int r_t);

// All CNOT endpoints are logical qubits; the circuit assumes all-to-all connectivity.
Circuit synth_diag_gray_walk(const DiagonalSpec& theta);

enum class DiagStrategy { Auto, Path, Grid, Tree, Star, Expander, General, Routed };

std::string strategy_name(DiagStrategy s);
DiagStrategy parse_strategy(const std::string& s);

// How the control bit reaches the targets in one Gray step.
enum class StepMode { Individual, Chain, Cascade };

// Register entries are vertices of the constraint graph. control[k-1] carries
// control index k of the Gray codes, target[i-1] carries target i.
struct RegisterSplit {
    std::vector<int> control;
    std::vector<int> target;
    int r_c = 0;
    int r_t = 0;
    int tau = 0;
    std::vector<int> gray_plan;  // j_i in [1, r_c]
    StepMode mode = StepMode::Individual;
    ExpanderCascade cascade;     // used when mode == Cascade
};

// Split chosen by a strategy for the register `qubits` (vertices of g).
RegisterSplit plan_split(const Graph& g, const std::vector<int>& qubits, DiagStrategy strategy);

// Phase polynomial sum_s alpha_s <s,x> on the register `qubits`; string bit k
// (1-based, most significant first) lives on qubits[k-1].
struct FrameworkParts {
    Circuit forward;  // C_1 .. C_l including the target basis changes
    Circuit reset;    // returns the target register to x_T
    Circuit lambda;   // phases on strings whose target part is zero
    RegisterSplit split;
    int cover_length = 0;
};

FrameworkParts build_framework(const Graph& g, const std::vector<int>& qubits, const std::vector<double>& alpha,
                               const RegisterSplit& split);

// Appends the phase polynomial, recursing on the control register with the routed split.
void emit_phase_polynomial(Circuit& c, const Graph& g, const std::vector<int>& qubits,
                           const std::vector<double>& alpha, DiagStrategy strategy);

struct DiagOptions {
    DiagStrategy strategy = DiagStrategy::Auto;
    bool simulate = true;
};

struct DiagResult {
    Circuit circuit;
    SynthesisReport report;
    RegisterSplit split;
};

DiagStrategy resolve_strategy(const Graph& g, DiagStrategy requested);

DiagResult synth_diag_noancilla(const Graph& g, const DiagonalSpec& theta, const DiagOptions& opt = {});

}  // namespace qgsynth
