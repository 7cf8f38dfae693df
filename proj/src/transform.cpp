// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qgsynth/errors.hpp"
#include "qgsynth/linear_synth.hpp"

namespace qgsynth {

namespace {

Edge key(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<int> reversed(std::vector<int> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

int EdgeBridge::max_path_length() const {
    int best = 0;
    for (const auto& cls : classes)
        for (const auto& e : cls) best = std::max(best, static_cast<int>(e.path.size()) - 1);
    return best;
}

void validate_bridge(const Graph& g, const EdgeBridge& bridge) {
    std::set<Edge> seen;
    for (std::size_t k = 0; k < bridge.classes.size(); ++k) {
        std::set<int> used;
        for (const auto& e : bridge.classes[k]) {
            if (e.path.size() < 2 || e.path.front() != e.u || e.path.back() != e.v)
                throw BridgeInvalid("host path does not join its edge endpoints");
            for (std::size_t i = 0; i + 1 < e.path.size(); ++i)
                if (!g.has_edge(e.path[i], e.path[i + 1])) throw BridgeInvalid("host path leaves the graph");
            if (!seen.insert(key(e.u, e.v)).second) throw BridgeInvalid("edge appears in two classes");
            for (int v : e.path)
                if (!used.insert(v).second)
                    throw BridgeInvalid("host paths in class " + std::to_string(k) + " share a vertex");
        }
    }
}

Circuit transform_circuit(const Circuit& c, const Graph& g, const Graph& gp, const EdgeBridge& bridge) {
    validate_bridge(g, bridge);
    if (!bridge.vertex_map.empty() && static_cast<int>(bridge.vertex_map.size()) != gp.size())
        throw BridgeInvalid("vertex map must cover the extended graph");
    std::map<Edge, std::vector<int>> host;
    for (const auto& cls : bridge.classes)
        for (const auto& e : cls) host[key(e.u, e.v)] = e.u < e.v ? e.path : reversed(e.path);

    Circuit out(g.size(), c.ancilla + g.size() - c.num_qubits);
    auto cnot = [&](int a, int b) {
        if (!gp.has_edge(a, b)) throw BridgeInvalid("input circuit is not valid on the extended graph");
        const int u = bridge.host_vertex(a), v = bridge.host_vertex(b);
        if (g.has_edge(u, v)) {
            out.cx(u, v);
            return;
        }
        auto it = host.find(key(u, v));
        if (it == host.end()) throw BridgeInvalid("extended edge has no host path");
        emit_cnot_along(out, u < v ? it->second : reversed(it->second));
    };
    for (Gate gt : c.gates) {
        if (gt.kind == GateKind::CX) {
            cnot(gt.q0, gt.q1);
        } else if (gt.kind == GateKind::Swap) {
            cnot(gt.q0, gt.q1);
            cnot(gt.q1, gt.q0);
            cnot(gt.q0, gt.q1);
        } else {
            gt.q0 = bridge.host_vertex(gt.q0);
            out.push(gt);
        }
    }
    return out;
}

BrickwallEmbedding brickwall_embedding(const Graph& bw) {
    if (bw.kind() != GraphKind::Brickwall) throw InvalidParameters("embedding needs a brick-wall graph");
    const BrickParams p = bw.brick;
    const int w = brickwall_width(p);
    const int rows = p.n1 + 1;
    const int span = p.b2 - 1;
    const int sub = p.b2 - 2;

    BrickwallEmbedding out;
    out.grid = w >= rows ? grid_graph({w, rows}) : grid_graph({rows, w});
    auto grid_vertex = [&](int r, int col) { return w >= rows ? col * rows + r : r * w + col; };
    out.vertex_map.assign(rows * w, 0);
    for (int r = 0; r < rows; ++r)
        for (int col = 0; col < w; ++col) out.vertex_map[grid_vertex(r, col)] = brickwall_row_vertex(p, r, col);
    out.bridge.vertex_map = out.vertex_map;
    out.bridge.classes.assign(4 * sub, {});

    std::vector<std::pair<int, std::vector<int>>> pending;
    for (int layer = 0; layer < p.n1; ++layer) {
        const auto cols = brickwall_connector_columns(p, layer);
        const int offset = layer % 2 == 0 ? 0 : span / 2;
        // Brick b spans columns offset + (b-1)*span .. offset + b*span; odd layers have half bricks at both ends.
        auto brick_of = [&](int col) { return (col - offset + span) / span; };
        auto connector_chain = [&](int j) {
            std::vector<int> chain{brickwall_row_vertex(p, layer, cols[j])};
            for (int m : brickwall_connector_middle(p, layer, j)) chain.push_back(m);
            chain.push_back(brickwall_row_vertex(p, layer + 1, cols[j]));
            return chain;
        };
        auto class_index = [&](int brick, int k) { return (2 * (layer % 2) + brick % 2) * sub + k; };

        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            if (p.b1 == 2) break;
            const int col = cols[j];
            const int left = col == 0 ? -1 : brick_of(col - 1);
            pending.push_back({left >= 0 ? class_index(left, 0) : class_index(brick_of(col) + 1, 0), connector_chain(j)});
        }
        std::set<int> is_connector(cols.begin(), cols.end());
        for (int col = 0; col < w; ++col) {
            if (is_connector.count(col)) continue;
            const int brick = brick_of(col);
            const int lo = offset + (brick - 1) * span, hi = lo + span;
            const bool has_lo = is_connector.count(lo) > 0, has_hi = is_connector.count(hi) > 0;
            const bool go_low = has_lo && (!has_hi || col - lo <= hi - col);
            const int via = go_low ? lo : hi;
            const int j = static_cast<int>(std::find(cols.begin(), cols.end(), via) - cols.begin());
            std::vector<int> path;
            const int step = via > col ? 1 : -1;
            for (int x = col; x != via; x += step) path.push_back(brickwall_row_vertex(p, layer, x));
            for (int v : connector_chain(j)) path.push_back(v);
            for (int x = via - step; x != col - step; x -= step) path.push_back(brickwall_row_vertex(p, layer + 1, x));
            out.bridge.classes[class_index(brick, col - lo - 1)].push_back({path.front(), path.back(), path});
        }
    }
    // Connector chains go to their preferred class, or to the first class they do not touch.
    std::vector<std::set<int>> used(out.bridge.classes.size());
    for (std::size_t k = 0; k < used.size(); ++k)
        for (const auto& e : out.bridge.classes[k]) used[k].insert(e.path.begin(), e.path.end());
    auto fits = [&](std::size_t k, const std::vector<int>& chain) {
        return std::none_of(chain.begin(), chain.end(), [&](int v) { return used[k].count(v) > 0; });
    };
    for (const auto& [preferred, chain] : pending) {
        std::size_t k = static_cast<std::size_t>(preferred);
        if (!fits(k, chain)) {
            k = 0;
            while (k < used.size() && !fits(k, chain)) ++k;
            if (k == used.size()) {
                used.emplace_back();
                out.bridge.classes.emplace_back();
            }
        }
        used[k].insert(chain.begin(), chain.end());
        out.bridge.classes[k].push_back({chain.front(), chain.back(), chain});
    }
    return out;
}

}  // namespace qgsynth
