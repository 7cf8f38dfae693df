// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "qgsynth/bounds.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/sim.hpp"
#include "qgsynth/state_unitary.hpp"
#include "qgsynth/transform.hpp"

using namespace qgsynth;

namespace {

// Relabels a brick-wall circuit so grid vertex i becomes qubit i and the spare vertices trail.
Circuit to_grid_order(const Circuit& t, const BrickwallEmbedding& e) {
    std::vector<int> map(t.num_qubits, -1);
    for (std::size_t i = 0; i < e.vertex_map.size(); ++i) map[e.vertex_map[i]] = static_cast<int>(i);
    int next = static_cast<int>(e.vertex_map.size());
    for (int& q : map)
        if (q < 0) q = next++;
    Circuit out(t.num_qubits, t.num_qubits - static_cast<int>(e.vertex_map.size()));
    out.append_mapped(t, map);
    return out;
}

LayeredCircuit figure_circuit() {
    LayeredCircuit lc;
    lc.num_qubits = 6;
    lc.layers.resize(7);
    auto one = [&](int layer, std::vector<int> qs) {
        lc.layers[layer - 1].single_qubit = true;
        for (int q : qs) lc.layers[layer - 1].gates.push_back(Gate{GateKind::H, q});
    };
    auto two = [&](int layer, std::vector<std::pair<int, int>> ps) {
        lc.layers[layer - 1].single_qubit = false;
        for (auto [a, b] : ps) lc.layers[layer - 1].gates.push_back(Gate{GateKind::CX, a, b});
    };
    one(1, {0, 1, 2, 3, 4, 5});
    two(2, {{0, 1}, {2, 3}, {4, 5}});
    one(3, {1, 2, 4, 5});
    two(4, {{1, 2}, {4, 5}});
    one(5, {0, 1, 3, 4});
    two(6, {{0, 1}, {3, 4}});
    one(7, {0, 1, 2, 3, 4, 5});
    return lc;
}

}  // namespace

TEST_CASE("brick-wall embeddings bridge every grid edge") {
    for (auto [n1, n2, b1, b2] : std::vector<std::array<int, 4>>{{2, 2, 3, 5}, {1, 1, 3, 5}, {1, 1, 3, 3},
                                                                  {2, 3, 3, 3}, {2, 2, 2, 5}, {3, 2, 4, 7}}) {
        CAPTURE(n1);
        CAPTURE(n2);
        const Graph bw = brickwall_graph(n1, n2, b1, b2);
        const auto e = brickwall_embedding(bw);
        CHECK_NOTHROW(validate_bridge(bw, e.bridge));
        std::set<std::pair<int, int>> bridged;
        for (const auto& cls : e.bridge.classes)
            for (const auto& be : cls) bridged.insert(std::minmax(be.u, be.v));
        for (auto [u, v] : e.grid.edges()) {
            const int hu = e.vertex_map[u], hv = e.vertex_map[v];
            CHECK((bw.has_edge(hu, hv) || bridged.count(std::minmax(hu, hv)) == 1));
        }
        CHECK(std::set<int>(e.vertex_map.begin(), e.vertex_map.end()).size() == e.vertex_map.size());
    }
    const auto e = brickwall_embedding(brickwall_graph(2, 2, 3, 5));
    CHECK(e.grid.size() == 27);
    CHECK(e.bridge.class_count() <= 12);
}

TEST_CASE("broken bridges are rejected") {
    const Graph g = path_graph(4);
    EdgeBridge b;
    b.classes = {{BridgedEdge{0, 2, {0, 1, 2}}, BridgedEdge{1, 3, {1, 2, 3}}}};
    CHECK_THROWS_AS(validate_bridge(g, b), BridgeInvalid);
    b.classes = {{BridgedEdge{0, 3, {0, 2, 3}}}};
    CHECK_THROWS_AS(validate_bridge(g, b), BridgeInvalid);
    b.classes = {{BridgedEdge{0, 2, {0, 1, 2}}}, {BridgedEdge{1, 3, {1, 2, 3}}}};
    CHECK_NOTHROW(validate_bridge(g, b));
}

TEST_CASE("grid state preparation pulled back to a brick-wall") {
    std::mt19937_64 rng(9);
    const Graph bw = brickwall_graph(1, 1, 3, 5);
    const auto e = brickwall_embedding(bw);
    const int gm = e.grid.size();
    REQUIRE(bw.size() <= 12);
    for (int n = 3; n <= 5; ++n) {
        const auto v = random_state(n, rng);
        const auto q = qsp_synthesize(e.grid, v, gm - n, false);
        const Circuit t = transform_circuit(q.circuit, bw, e.grid, e.bridge);
        CHECK(validate_connectivity(t, bw).empty());
        const int c = e.bridge.class_count(), l = e.bridge.max_path_length();
        CHECK(metrics(t).depth <= (1 + 4 * c * l) * metrics(q.circuit).depth);
        const Circuit r = to_grid_order(t, e);
        TargetSpec target = v;
        const auto res = verify_target(r, target, bw.size() - n);
        CHECK(res.residual <= 1e-8);
        CHECK(res.ancilla_restored);
    }
}

TEST_CASE("lightcone profile of the example circuit") {
    const auto p = lightcone_profile(figure_circuit(), 3);
    const std::vector<std::vector<int>> want{{0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2}, {1, 2},
                                             {0, 1}, {0, 1}, {0, 1, 2}, {0, 1, 2}};
    REQUIRE(p.sets.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
        auto s = p.sets[i];
        std::sort(s.begin(), s.end());
        CHECK(s == want[i]);
    }
    CHECK(p.budget == 19);
}

TEST_CASE("budget checks on synthesized circuits") {
    std::mt19937_64 rng(4);
    for (int n = 2; n <= 5; ++n) {
        const Graph g = path_graph(n);
        const auto q = qsp_synthesize(g, random_state(n, rng), 0, false);
        const auto chk = lightcone_budget_check(q.circuit, BoundTask::Qsp, n);
        CHECK(chk.required == (1LL << n) - 1);
        CHECK(chk.pass);
        if (n <= 3) {
            const auto u = gus_synthesize(g, random_unitary(n, rng), 0, false);
            const auto gc = lightcone_budget_check(u.circuit, BoundTask::Gus, n);
            CHECK(gc.required == (1LL << (2 * n)) - 1);
            CHECK(gc.pass);
        }
    }
    Circuit tiny(3);
    tiny.h(0);
    CHECK_FALSE(lightcone_budget_check(tiny, BoundTask::Qsp, 3).pass);
}

TEST_CASE("lower-bound terms") {
    const auto p = depth_lower_bound(path_graph(10), BoundTask::Qsp, 10, 0);
    CHECK(p.terms.at("slab_1") == doctest::Approx(102.4));
    CHECK(p.family_max == doctest::Approx(102.4));
    CHECK(p.nu == 5);
    CHECK(p.terms.at("matching") == doctest::Approx(1024.0 / 5));
    CHECK(p.max == doctest::Approx(204.8));
    const auto s = depth_lower_bound(star_graph(14), BoundTask::Qsp, 4, 10);
    CHECK(s.max == doctest::Approx(16.0));
    const auto gus = depth_lower_bound(path_graph(4), BoundTask::Gus, 4, 0);
    CHECK(gus.terms.at("matching") == doctest::Approx(256.0 / 2));
    CHECK_THROWS_AS(depth_lower_bound(path_graph(5), BoundTask::Qsp, 4, 0), InvalidParameters);
    CHECK(parse_task(task_name(BoundTask::Diag)) == BoundTask::Diag);
}
