// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <string>

#include "qgsynth/circuit.hpp"
#include "qgsynth/targets.hpp"

namespace qgsynth {

// Binary tree with 2^(n+1)-1 vertices in heap order; leaf 2^n-1+x carries e_x.
Circuit unary_qsp_tree(const StateSpec& v);

// |0^n>|e_x> -> |x>|0^(2^n)> on the same tree; bit i of x lands on vertex i-1.
Circuit unary_to_binary(int n);

struct HybridPlan {
    int t = 0;  // prefix width prepared through the unary tree, 0 for the plain cascade
    std::string note;
};

HybridPlan hybrid_plan(int n, int m);

// Host is the binary tree on n+m vertices; data qubits are vertices 0..n-1.
Circuit qsp_tree_improved(const StateSpec& v, int m);

}  // namespace qgsynth
