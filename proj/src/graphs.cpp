// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <set>

#include "qgsynth/errors.hpp"

namespace qgsynth {

std::string kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Path: return "path";
        case GraphKind::Grid: return "grid";
        case GraphKind::Tree: return "tree";
        case GraphKind::Star: return "star";
        case GraphKind::Brickwall: return "brickwall";
        case GraphKind::Explicit: return "explicit";
    }
    return "explicit";
}

Graph::Graph(int vertex_count, const std::vector<Edge>& edges, GraphKind kind)
    : n_(vertex_count), kind_(kind), adj_(vertex_count) {
    if (vertex_count <= 0) throw InvalidParameters("vertex count must be positive");
    std::set<Edge> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidParameters("edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) +
                                    ") references a missing vertex");
        if (u == v) throw InvalidParameters("self-loop at vertex " + std::to_string(u + 1));
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) continue;
        edges_.push_back(e);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
    std::sort(edges_.begin(), edges_.end());
    if (n_ <= 64) {
        adj_bits_.assign(n_, 0);
        for (auto [u, v] : edges_) {
            adj_bits_[u] |= std::uint64_t{1} << v;
            adj_bits_[v] |= std::uint64_t{1} << u;
        }
    }
    if (!is_connected(*this)) throw DisconnectedGraph("graph has more than one component");
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    if (!adj_bits_.empty()) return (adj_bits_[u] >> v) & 1U;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    Graph g(n, e, GraphKind::Path);
    g.dims = {n};
    return g;
}

Graph grid_graph(const std::vector<int>& dims) {
    if (dims.empty()) throw InvalidParameters("grid needs at least one dimension");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] <= 0) throw InvalidParameters("grid dimensions must be positive");
        if (i > 0 && dims[i] > dims[i - 1])
            throw InvalidParameters("grid dimensions must be non-increasing");
    }
    int n = 1;
    for (int d : dims) n *= d;
    std::vector<int> stride(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v) {
        for (std::size_t a = 0; a < dims.size(); ++a) {
            int coord = (v / stride[a]) % dims[a];
            if (coord + 1 < dims[a]) e.push_back({v, v + stride[a]});
        }
    }
    Graph g(n, e, GraphKind::Grid);
    g.dims = dims;
    return g;
}

Graph tree_graph(int arity, int vertex_count) {
    if (arity < 2) throw InvalidParameters("tree arity must be at least 2");
    std::vector<Edge> e;
    for (int v = 1; v < vertex_count; ++v) e.push_back({(v - 1) / arity, v});
    Graph g(vertex_count, e, GraphKind::Tree);
    g.arity = arity;
    return g;
}

Graph tree_graph_depth(int arity, int depth) {
    if (depth < 0) throw InvalidParameters("tree depth must be non-negative");
    long long n = 0, layer = 1;
    for (int i = 0; i <= depth; ++i) {
        n += layer;
        layer *= arity;
    }
    if (n > (1 << 26)) throw InvalidParameters("tree too large");
    return tree_graph(arity, static_cast<int>(n));
}

Graph star_graph(int n) {
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({0, v});
    return Graph(n, e, GraphKind::Star);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, e, GraphKind::Explicit);
}

int brickwall_width(const BrickParams& p) { return p.n2 * (p.b2 - 1) + 1; }

int brickwall_row_vertex(const BrickParams& p, int row, int col) {
    return row * brickwall_width(p) + col;
}

std::vector<int> brickwall_connector_columns(const BrickParams& p, int layer) {
    std::vector<int> cols;
    if (layer % 2 == 0) {
        for (int j = 0; j <= p.n2; ++j) cols.push_back(j * (p.b2 - 1));
    } else {
        for (int j = 0; j < p.n2; ++j) cols.push_back((p.b2 - 1) / 2 + j * (p.b2 - 1));
    }
    return cols;
}

std::vector<int> brickwall_connector_middle(const BrickParams& p, int layer, int index) {
    int base = (p.n1 + 1) * brickwall_width(p);
    int mid = p.b1 - 2;
    for (int r = 0; r < layer; ++r)
        base += static_cast<int>(brickwall_connector_columns(p, r).size()) * mid;
    base += index * mid;
    std::vector<int> out(mid);
    std::iota(out.begin(), out.end(), base);
    return out;
}

Graph brickwall_graph(int n1, int n2, int b1, int b2) {
    if (n1 < 1 || n2 < 1 || b1 < 2 || b2 < 3 || b2 % 2 == 0)
        throw InvalidParameters("brick-wall needs n1,n2 >= 1, b1 >= 2 and odd b2 >= 3");
    BrickParams p{n1, n2, b1, b2};
    int w = brickwall_width(p);
    int n = (n1 + 1) * w;
    for (int r = 0; r < n1; ++r) n += static_cast<int>(brickwall_connector_columns(p, r).size()) * (b1 - 2);
    std::vector<Edge> e;
    for (int r = 0; r <= n1; ++r)
        for (int c = 0; c + 1 < w; ++c) e.push_back({brickwall_row_vertex(p, r, c), brickwall_row_vertex(p, r, c + 1)});
    for (int r = 0; r < n1; ++r) {
        auto cols = brickwall_connector_columns(p, r);
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            std::vector<int> chain{brickwall_row_vertex(p, r, cols[j])};
            for (int m : brickwall_connector_middle(p, r, j)) chain.push_back(m);
            chain.push_back(brickwall_row_vertex(p, r + 1, cols[j]));
            for (std::size_t k = 0; k + 1 < chain.size(); ++k) e.push_back({chain[k], chain[k + 1]});
        }
    }
    Graph g(n, e, GraphKind::Brickwall);
    g.brick = p;
    return g;
}

Graph explicit_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges, GraphKind::Explicit); }

Graph random_connected_graph(int n, double extra_edge_prob, std::mt19937_64& rng) {
    std::vector<Edge> e;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.push_back({pick(rng), v});
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < extra_edge_prob) e.push_back({u, v});
    return Graph(n, e, GraphKind::Explicit);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.size() || v >= g.size()) throw InvalidParameters("vertex out of range");
    std::vector<int> prev(g.size(), -1);
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    q.push(v);
    seen[v] = 1;
    while (!q.empty()) {
        int a = q.front();
        q.pop();
        if (a == u) break;
        for (int w : g.neighbors(a)) {
            if (!seen[w]) {
                seen[w] = 1;
                prev[w] = a;
                q.push(w);
            }
        }
    }
    std::vector<int> path{u};
    for (int a = u; a != v; a = prev[a]) path.push_back(prev[a]);
    return path;
}

int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[v]; }

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.size(); ++v) {
        auto d = bfs_distances(g, v);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

bool is_connected(const Graph& g) {
    auto d = bfs_distances(g, 0);
    return std::none_of(d.begin(), d.end(), [](int x) { return x < 0; });
}

namespace {

// Edmonds' blossom algorithm for maximum cardinality matching.
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.size()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int w : g_.neighbors(v)) {
                if (match_[w] == -1) {
                    match_[w] = v;
                    match_[v] = w;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int end = find_path(v);
            while (end != -1) {
                int pv = parent_[end], ppv = match_[pv];
                match_[end] = pv;
                match_[pv] = end;
                end = ppv;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        std::vector<char> mark(n_, 0);
        while (true) {
            a = base_[a];
            mark[a] = 1;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (mark[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
};

}  // namespace

std::vector<Edge> max_matching(const Graph& g) {
    auto match = Blossom(g).run();
    std::vector<Edge> out;
    for (int v = 0; v < g.size(); ++v)
        if (match[v] > v) out.push_back({v, match[v]});
    return out;
}

bool is_matching(const Graph& g, const std::vector<Edge>& m) {
    std::vector<char> used(g.size(), 0);
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v) || used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

namespace {

struct ExpansionSearch {
    int n;
    std::vector<std::uint32_t> nb;
    int max_size;
    long long best_num = -1, best_den = 1;

    void visit(int next, int count, std::uint32_t set, std::uint32_t nbrs) {
        if (count > 0) {
            long long out = std::popcount(nbrs & ~set);
            if (best_num < 0 || out * best_den < best_num * count) {
                best_num = out;
                best_den = count;
            }
        }
        if (count == max_size) return;
        for (int v = next; v < n; ++v)
            visit(v + 1, count + 1, set | (1U << v), nbrs | nb[v]);
    }
};

}  // namespace

Rational vertex_expansion(const Graph& g) {
    if (g.size() > 24) throw TooLargeForExactExpansion("exact expansion limited to 24 vertices");
    ExpansionSearch s;
    s.n = g.size();
    s.nb.assign(s.n, 0);
    for (auto [u, v] : g.edges()) {
        s.nb[u] |= 1U << v;
        s.nb[v] |= 1U << u;
    }
    // 0 < |S| < |V|/2
    s.max_size = (s.n - 1) / 2;
    if (s.max_size == 0) return Rational{0, 1};
    s.visit(0, 0, 0, 0);
    long long a = s.best_num, b = s.best_den;
    long long d = std::gcd(a, b);
    if (d == 0) d = 1;
    return Rational{a / d, b / d};
}

ExpanderCascade expander_cascade_from(const Graph& g, const std::vector<int>& seed, int target_size,
                                      const std::vector<int>& forbidden) {
    ExpanderCascade c;
    std::vector<char> in_s(g.size(), 0), banned(g.size(), 0);
    for (int v : forbidden) banned[v] = 1;
    std::vector<int> s = seed;
    for (int v : s) in_s[v] = 1;
    c.sets.push_back(s);
    while (static_cast<int>(s.size()) < target_size) {
        std::vector<char> taken(g.size(), 0);
        std::vector<Edge> m;
        for (int u : s) {
            for (int w : g.neighbors(u)) {
                if (in_s[w] || banned[w] || taken[w]) continue;
                taken[w] = 1;
                m.push_back({u, w});
                break;
            }
        }
        if (m.empty()) throw GrowthStalled("no boundary vertex available at |S|=" + std::to_string(s.size()));
        for (auto [u, w] : m) {
            in_s[w] = 1;
            s.push_back(w);
        }
        c.matchings.push_back(m);
        c.sets.push_back(s);
    }
    return c;
}

ExpanderCascade expander_cascade(const Graph& g, int seed_size, int target_size) {
    if (seed_size < 1 || seed_size > g.size()) throw InvalidParameters("seed size out of range");
    if (2 * target_size > g.size()) throw InvalidParameters("target size must be at most |V|/2");
    std::vector<int> seed(seed_size);
    std::iota(seed.begin(), seed.end(), 0);
    auto c = expander_cascade_from(g, seed, target_size, {});
    if (g.size() <= 24) c.expansion = vertex_expansion(g);
    return c;
}

std::vector<int> hamiltonian_path_grid(const std::vector<int>& dims) {
    if (dims.empty()) return {};
    std::vector<int> stride(dims.size(), 1);
    for (int i = static_cast<int>(dims.size()) - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];
    // Recursive boustrophedon over the axes, last axis fastest.
    std::vector<int> order{0};
    for (int a = static_cast<int>(dims.size()) - 1; a >= 0; --a) {
        std::vector<int> next;
        for (int c = 0; c < dims[a]; ++c) {
            if (c % 2 == 0) {
                for (int v : order) next.push_back(v + c * stride[a]);
            } else {
                for (auto it = order.rbegin(); it != order.rend(); ++it) next.push_back(*it + c * stride[a]);
            }
        }
        order = std::move(next);
    }
    return order;
}

DfsLabeling dfs_labeling(const Graph& g, int root) {
    int n = g.size();
    DfsLabeling out;
    out.label.assign(n, -1);
    out.parent.assign(n, -1);
    out.order.assign(n, -1);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    seen[root] = 1;
    int next_label = n - 1;
    out.label[root] = next_label--;
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        const auto& nb = g.neighbors(v);
        if (idx < nb.size()) {
            int w = nb[idx++];
            if (!seen[w]) {
                seen[w] = 1;
                out.parent[w] = v;
                out.label[w] = next_label--;
                stack.push_back({w, 0});
            }
        } else {
            stack.pop_back();
        }
    }
    for (int v = 0; v < n; ++v) out.order[out.label[v]] = v;
    return out;
}

int tree_distance(const std::vector<int>& parent, int u, int v) {
    auto depth = [&](int a) {
        int d = 0;
        while (parent[a] >= 0) {
            a = parent[a];
            ++d;
        }
        return d;
    };
    int du = depth(u), dv = depth(v), d = 0;
    while (du > dv) { u = parent[u]; --du; ++d; }
    while (dv > du) { v = parent[v]; --dv; ++d; }
    while (u != v) {
        u = parent[u];
        v = parent[v];
        d += 2;
    }
    return d;
}

std::vector<int> bfs_order(const Graph& g, int root) {
    std::vector<int> order;
    std::vector<char> seen(g.size(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    return order;
}

}  // namespace qgsynth
