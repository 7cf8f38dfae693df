// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/gray_walsh.hpp"
#include "qgsynth/sim.hpp"
#include "qgsynth/targets.hpp"

namespace qgsynth {

// V = D3 (I x SH) D2 (I x HS^dag) D1 with the 1q gates on the target qubit.
struct UcgDiagonals {
    DiagonalSpec d1;
    DiagonalSpec d2;
    DiagonalSpec d3;
    int target = 0;
};

UcgDiagonals ucg_to_diagonals(const UcgSpec& v);

// Dense reconstruction of the decomposition, for checks.
UnitarySpec ucg_from_diagonals(const UcgDiagonals& d);

// Emits V acting on qubit k-1 -> data[k-1]; `ancilla` are clean qubits the diagonals may borrow.
void emit_ucg(Circuit& c, const Graph& g, const std::vector<int>& data, const UcgSpec& v,
              const std::vector<int>& ancilla, std::vector<std::string>* backends = nullptr);

// Data qubits are vertices 0..n-1, ancilla n..n+m-1.
Circuit synth_ucg(const Graph& g, const UcgSpec& v, int m);

std::vector<UcgSpec> state_to_ucgs(const StateSpec& v);

struct SynthOutput {
    Circuit circuit;
    SynthesisReport report;
};

SynthOutput qsp_synthesize(const Graph& g, const StateSpec& v, int m, bool simulate = true);

// Application order: result[0] acts first.
std::vector<UcgSpec> unitary_to_ucgs(const UnitarySpec& u);

SynthOutput gus_synthesize(const Graph& g, const UnitarySpec& u, int m, bool simulate = true);

}  // namespace qgsynth
