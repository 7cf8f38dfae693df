// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qgsynth {

// Vertices are 0-based in the C++ API. The JSON formats use 1-based ids.
enum class GraphKind { Path, Grid, Tree, Star, Brickwall, Explicit };

std::string kind_name(GraphKind k);

struct BrickParams {
    int n1 = 0;
    int n2 = 0;
    int b1 = 0;
    int b2 = 0;
};

using Edge = std::pair<int, int>;

class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<Edge>& edges, GraphKind kind);

    int size() const { return n_; }
    GraphKind kind() const { return kind_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // Kind metadata.
    std::vector<int> dims;
    int arity = 0;
    BrickParams brick;

private:
    int n_ = 0;
    GraphKind kind_ = GraphKind::Explicit;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> adj_bits_;
};

Graph path_graph(int n);
Graph grid_graph(const std::vector<int>& dims);
// Breadth-first prefix of the complete d-ary tree; vertex v has children d*v+1..d*v+d.
Graph tree_graph(int arity, int vertex_count);
Graph tree_graph_depth(int arity, int depth);
Graph star_graph(int n);
Graph complete_graph(int n);
Graph brickwall_graph(int n1, int n2, int b1, int b2);
Graph explicit_graph(int n, const std::vector<Edge>& edges);
Graph random_connected_graph(int n, double extra_edge_prob, std::mt19937_64& rng);

// Layout helpers for the brick-wall graph: row r, column j (both 0-based) and
// the middle vertices of the connector in layer r at connector index j.
int brickwall_width(const BrickParams& p);
int brickwall_row_vertex(const BrickParams& p, int row, int col);
std::vector<int> brickwall_connector_columns(const BrickParams& p, int layer);
std::vector<int> brickwall_connector_middle(const BrickParams& p, int layer, int index);

std::vector<int> bfs_distances(const Graph& g, int src);
std::vector<int> shortest_path(const Graph& g, int u, int v);
int distance(const Graph& g, int u, int v);
int diameter(const Graph& g);
bool is_connected(const Graph& g);

std::vector<Edge> max_matching(const Graph& g);
bool is_matching(const Graph& g, const std::vector<Edge>& m);

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational& o) const { return num * o.den == o.num * den; }
};

Rational vertex_expansion(const Graph& g);

struct ExpanderCascade {
    std::vector<std::vector<int>> sets;       // S_1 .. S_l
    std::vector<std::vector<Edge>> matchings;  // M_{S_i}: (u in S_i, w in Gamma(S_i))
    Rational expansion;

    const std::vector<int>& last() const { return sets.back(); }
    int length() const { return static_cast<int>(sets.size()); }
};

ExpanderCascade expander_cascade(const Graph& g, int seed_size, int target_size);
ExpanderCascade expander_cascade_from(const Graph& g, const std::vector<int>& seed,
                                      int target_size, const std::vector<int>& forbidden);

std::vector<int> hamiltonian_path_grid(const std::vector<int>& dims);

struct DfsLabeling {
    std::vector<int> order;   // order[i] = vertex carrying label i (0-based labels)
    std::vector<int> label;   // label[v]
    std::vector<int> parent;  // spanning tree parent, -1 at the root
};

DfsLabeling dfs_labeling(const Graph& g, int root = 0);
int tree_distance(const std::vector<int>& parent, int u, int v);

// Orders in which every prefix induces a connected subgraph.
std::vector<int> bfs_order(const Graph& g, int root = 0);

}  // namespace qgsynth
