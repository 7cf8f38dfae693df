// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"

namespace qgsynth {

enum class BoundTask { Qsp, Diag, Gus };

std::string task_name(BoundTask t);
BoundTask parse_task(const std::string& s);

struct LightconeProfile {
    // sets[i-1] is S'_i for i = 1..d+1; sets.back() is the input set.
    std::vector<std::vector<int>> sets;
    long long budget = 0;  // sum of |S'_i| over i = 1..d
};

// Inputs are qubits 0..n_inputs-1. With open_wires every wire carries identity edges from layer 1,
// as if an identity gate opened each wire; those padding gates are not counted as acting.
LightconeProfile lightcone_profile(const LayeredCircuit& lc, int n_inputs, bool open_wires = false);

struct BudgetCheck {
    long long budget = 0;
    long long required = 0;
    bool pass = false;
    int layered_depth = 0;
};

BudgetCheck lightcone_budget_check(const Circuit& c, BoundTask task, int n);

struct BoundReport {
    std::map<std::string, double> terms;
    double max = 0.0;         // over every term
    double family_max = 0.0;  // over the terms specific to the graph family
    int nu = 0;
};

BoundReport depth_lower_bound(const Graph& g, BoundTask task, int n, int m);

std::string encode_bound(const BoundReport& b);

}  // namespace qgsynth
