// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <string>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/diag.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/gray_walsh.hpp"
#include "qgsynth/sim.hpp"

namespace qgsynth {

// One copy register with the target qubits that read from it.
struct CopyBlock {
    std::vector<int> copy;     // copy[i-1] holds prefix bit i during the Gray cycle
    std::vector<int> targets;  // global target indices are assigned block by block
};

struct RegisterLayout {
    std::string kind;
    int n = 0;
    int m = 0;
    int p = 0;
    int tau = 0;
    std::vector<int> r_inp;
    std::vector<int> r_copy;
    std::vector<int> r_targ;  // r_targ[k] carries suffix string t_k = k
    std::vector<int> r_aux;
    std::vector<int> ell_plan;  // Gray code index used by target k
    std::vector<CopyBlock> blocks;
    std::vector<int> block_of;  // block index of target k
    int unused = 0;
};

// Enforces m >= 3n.
RegisterLayout build_layout(const Graph& g, int n, int m);
// Largest layout that fits in m ancilla, without the m >= 3n gate.
RegisterLayout fitted_layout(const Graph& g, int n, int m);

struct StageTrace {
    Circuit suf_copy;
    Circuit gray_init;
    Circuit pre_copy;
    Circuit gray_cycle;
    Circuit inverse;

    Circuit concatenated() const;
    std::vector<std::pair<std::string, Metrics>> stage_metrics() const;
};

struct AncillaResult {
    Circuit circuit;
    StageTrace trace;
    RegisterLayout layout;
    SynthesisReport report;
};

AncillaResult synth_diag_ancilla(const Graph& g, const DiagonalSpec& theta, int m, bool simulate = true);

// Targets are the final cascade layer; the cascade must avoid the data qubits 0..n-1.
Circuit synth_diag_expander_ancilla(const Graph& g, const DiagonalSpec& theta, int m, const ExpanderCascade& cascade);
ExpanderCascade ancilla_cascade(const Graph& g, int n, int m);

std::string choose_backend(const Graph& g, int n, int m);

// Dispatching front end used by the CLI and the state/unitary pipelines.
DiagResult synth_diag(const Graph& g, const DiagonalSpec& theta, int m, DiagStrategy strategy = DiagStrategy::Auto,
                      bool simulate = true);

// Phase polynomial on `data` (string bit k on data[k-1]) using the clean qubits in
// `ancilla` when the backend thresholds allow it. Returns the backend id.
std::string emit_diagonal(Circuit& c, const Graph& g, const std::vector<int>& data, const std::vector<double>& alpha,
                          const std::vector<int>& ancilla);

// Ancilla vertices in the order the copy/target blocks are carved from.
std::vector<int> ancilla_order(const Graph& g, const std::vector<int>& ancilla);
RegisterLayout layout_for(const Graph& g, const std::vector<int>& data, const std::vector<int>& ancilla);

std::string encode_stage_trace(const StageTrace& t);

}  // namespace qgsynth
