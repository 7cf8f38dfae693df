// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <algorithm>
#include <random>

#include "doctest.h"
#include "qgsynth/errors.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/linear_synth.hpp"
#include "qgsynth/sim.hpp"

using namespace qgsynth;

namespace {

// Bit of qubit q in a basis index, qubit 0 most significant.
int bit(std::uint64_t x, int nq, int q) { return static_cast<int>((x >> (nq - 1 - q)) & 1U); }
std::uint64_t with_bit(std::uint64_t x, int nq, int q, int b) {
    const std::uint64_t m = qubit_bit(nq, q);
    return b ? (x | m) : (x & ~m);
}

// Maps a basis index through M acting on qubits 0..n-1 (bit j of the F2 vector is qubit j).
std::uint64_t apply_on_qubits(const F2Matrix& m, std::uint64_t x, int nq) {
    std::uint64_t v = 0;
    for (int j = 0; j < m.n; ++j) v |= std::uint64_t(bit(x, nq, j)) << j;
    const std::uint64_t w = m.apply(v);
    for (int j = 0; j < m.n; ++j) x = with_bit(x, nq, j, (w >> j) & 1U);
    return x;
}

}  // namespace

TEST_CASE("F2 matrix algebra") {
    const F2Matrix m = random_invertible(10, 4);
    CHECK(m.invertible());
    CHECK(m * m.inverse() == F2Matrix::identity(10));
    F2Matrix s = F2Matrix::identity(3);
    s.set(2, 2, false);
    CHECK(s.rank() == 2);
    CHECK_THROWS_AS(synth_linear_f2(path_graph(3), s), SingularMatrix);
}

TEST_CASE("routed CNOT length and action") {
    CHECK(route_cnot(path_graph(2), 0, 1).size() == 1);
    for (int d = 2; d <= 7; ++d) {
        const Graph g = path_graph(d + 1);
        const Circuit c = route_cnot(g, 0, d);
        CHECK(cnot_count(c) == 4 * d - 4);
        CHECK(cnot_count(c) <= 4 * d);
        CHECK(validate_connectivity(c, g).empty());
        for (std::uint64_t x = 0; x < (1ULL << (d + 1)); ++x) {
            const std::uint64_t want = bit(x, d + 1, 0) ? x ^ qubit_bit(d + 1, d) : x;
            REQUIRE(f2_apply(c, x) == want);
        }
    }
}

TEST_CASE("fanout along a path uses 2n-1 CNOTs") {
    const Graph g = path_graph(6);
    CHECK(cnot_count(fanout(g, 0, {1})) == 1);
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> t;
        for (int k = 1; k <= n; ++k) t.push_back(k);
        const Circuit c = fanout(g, 0, t);
        CHECK(cnot_count(c) == 2 * n - 1);
        CHECK(validate_connectivity(c, g).empty());
        for (std::uint64_t x = 0; x < 64; ++x) {
            std::uint64_t want = x;
            if (bit(x, 6, 0))
                for (int k : t) want ^= qubit_bit(6, k);
            REQUIRE(f2_apply(c, x) == want);
        }
    }
    CHECK_THROWS_AS(fanout(g, 0, {2, 3}), NotAPath);
}

TEST_CASE("linear synthesis on constrained graphs") {
    std::vector<Graph> graphs{path_graph(8), star_graph(7), tree_graph(2, 7), grid_graph({3, 2})};
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        const F2Matrix m = random_invertible(g.size(), 100 + gi);
        const Circuit c = synth_linear_f2(g, m);
        CHECK(validate_connectivity(c, g).empty());
        for (std::uint64_t x = 0; x < (1ULL << g.size()); x += 3) REQUIRE(f2_apply(c, x) == apply_on_qubits(m, x, g.size()));
    }
    CHECK(synth_linear_f2(path_graph(4), F2Matrix::identity(4)).empty());
}

TEST_CASE("permutations as swap networks") {
    const Graph g = path_graph(8);
    std::vector<int> perm{7, 0, 6, 1, 5, 2, 4, 3};
    const Circuit c = synth_permutation(g, perm);
    CHECK(validate_connectivity(c, g).empty());
    for (std::uint64_t x : {1ULL, 37ULL, 200ULL, 255ULL}) {
        std::uint64_t want = 0;
        for (int i = 0; i < 8; ++i) want = with_bit(want, 8, perm[i], bit(x, 8, i));
        CHECK(f2_apply(c, x) == want);
    }
    CHECK(synth_permutation(g, {0, 1, 2, 3, 4, 5, 6, 7}).empty());
    CHECK(cnot_count(synth_permutation(g, {1, 0, 2, 3, 4, 5, 6, 7})) == 3);
}

TEST_CASE("copy pipeline depth") {
    for (int n = 1; n <= 4; ++n) {
        for (int t = 1; t <= 3; ++t) {
            const int nq = n * (t + 1);
            std::vector<int> src;
            std::vector<std::vector<int>> sinks(t);
            for (int i = 0; i < n; ++i) src.push_back(i);
            for (int s = 0; s < t; ++s)
                for (int i = 0; i < n; ++i) sinks[s].push_back(n * (s + 1) + i);
            const Circuit c = copy_register_logical(nq, src, sinks, CopyTopology::Path);
            CHECK(cnot_count(c) == n * t);
            const auto layers = copy_pipeline_schedule(src, sinks);
            CHECK(static_cast<int>(layers.size()) == n + t - 1);
            std::size_t flat = 0;
            for (const auto& layer : layers) {
                std::vector<int> used(nq, 0);
                for (const auto& g2 : layer) {
                    CHECK(++used[g2.q0] == 1);
                    CHECK(++used[g2.q1] == 1);
                    CHECK(c.gates[flat].q0 == g2.q0);
                    CHECK(c.gates[flat++].q1 == g2.q1);
                }
            }
            const std::uint64_t y = 0b1011 & ((1ULL << n) - 1);
            std::uint64_t x = 0;
            for (int i = 0; i < n; ++i) x = with_bit(x, nq, i, (y >> i) & 1U);
            const std::uint64_t out = f2_apply(c, x);
            for (int s = 0; s < t; ++s)
                for (int i = 0; i < n; ++i) CHECK(bit(out, nq, sinks[s][i]) == int((y >> i) & 1U));
        }
    }
    CHECK_THROWS_AS(copy_register_logical(4, {0, 1}, {{1, 2}}, CopyTopology::Path), OverlappingRegisters);
}

TEST_CASE("copy onto tree subtrees") {
    const Graph g = tree_graph(2, 15);
    const Circuit c = copy_register(g, {0, 1}, {{3, 7}, {4, 9}, {5, 11}, {6, 13}}, CopyTopology::Tree);
    CHECK(validate_connectivity(c, g).empty());
    for (int y = 0; y < 4; ++y) {
        std::uint64_t x = with_bit(with_bit(0, 15, 0, y & 1), 15, 1, y >> 1);
        const std::uint64_t out = f2_apply(c, x);
        for (auto [a, b] : {std::pair{3, 7}, {4, 9}, {5, 11}, {6, 13}}) {
            CHECK(bit(out, 15, a) == (y & 1));
            CHECK(bit(out, 15, b) == (y >> 1));
        }
        CHECK(bit(out, 15, 0) == (y & 1));
    }
}

TEST_CASE("multi-controlled X with clean scratch") {
    const Graph g = path_graph(7);
    const std::vector<int> controls{0, 1, 2, 3};
    const Circuit c = multi_controlled_x(g, controls, "1011", 4, {5, 6});
    CHECK(validate_connectivity(c, g).empty());
    for (std::uint64_t x = 0; x < 32; ++x) {
        const std::uint64_t in = x << 2;
        const bool fire = (x >> 1) == 0b1011;
        const auto r = simulate_basis(c, in);
        const std::uint64_t want = fire ? in ^ qubit_bit(7, 4) : in;
        CHECK(std::abs(r[want]) == doctest::Approx(1.0));
    }
    CHECK_THROWS_AS(multi_controlled_x(g, controls, "1111", 4, {}), InsufficientScratch);
    CHECK(cnot_count(multi_controlled_x(g, {0}, "1", 1, {})) == 1);
}

TEST_CASE("fanout through an expander cascade") {
    const Graph g = complete_graph(8);
    const auto cas = expander_cascade_from(g, {1}, 4, {0});
    REQUIRE(cas.length() >= 2);
    const auto& prev = cas.sets[cas.length() - 2];
    const Circuit c = fanout_cascade(g, 0, cas);
    CHECK(validate_connectivity(c, g).empty());
    for (std::uint64_t x : {0ULL, 128ULL, 128ULL + 3ULL, 77ULL}) {
        std::uint64_t want = x;
        if (bit(x, 8, 0))
            for (int v : cas.last())
                if (std::find(prev.begin(), prev.end(), v) == prev.end()) want ^= qubit_bit(8, v);
        CHECK(f2_apply(c, x) == want);
    }
}
