// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/graphs.hpp"

namespace qgsynth {

// Host path for one extra edge; path.front() == u and path.back() == v in host labels.
struct BridgedEdge {
    int u = 0;
    int v = 0;
    std::vector<int> path;
};

struct EdgeBridge {
    std::vector<std::vector<BridgedEdge>> classes;
    // Vertex i of the extended graph sits on host vertex vertex_map[i]; empty means identity.
    std::vector<int> vertex_map;

    int class_count() const { return static_cast<int>(classes.size()); }
    int max_path_length() const;  // longest host path, in edges
    int host_vertex(int v) const { return vertex_map.empty() ? v : vertex_map[v]; }
};

// Throws BridgeInvalid when a path is broken, misses its endpoints, repeats an edge
// across classes, or shares a vertex with another path of its class.
void validate_bridge(const Graph& g, const EdgeBridge& bridge);

// `c` lives on gp; the result lives on g with every bridged CNOT routed along its host path.
Circuit transform_circuit(const Circuit& c, const Graph& g, const Graph& gp, const EdgeBridge& bridge);

struct BrickwallEmbedding {
    Graph grid;
    std::vector<int> vertex_map;  // grid vertex -> brick-wall vertex
    EdgeBridge bridge;
};

BrickwallEmbedding brickwall_embedding(const Graph& bw);

}  // namespace qgsynth
