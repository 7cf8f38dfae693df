// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "qgsynth/errors.hpp"
#include "qgsynth/graphs.hpp"

using namespace qgsynth;

namespace {

// Largest matching by trying every edge subset.
int brute_matching(const Graph& g) {
    const auto& e = g.edges();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << e.size()); ++mask) {
        std::uint32_t used = 0;
        bool ok = true;
        for (std::size_t i = 0; i < e.size() && ok; ++i) {
            if (!((mask >> i) & 1U)) continue;
            const std::uint32_t b = (1U << e[i].first) | (1U << e[i].second);
            ok = (used & b) == 0;
            used |= b;
        }
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

double brute_expansion(const Graph& g) {
    const int n = g.size();
    double best = 1e300;
    for (std::uint32_t s = 1; s < (1U << n); ++s) {
        const int k = __builtin_popcount(s);
        if (2 * k >= n) continue;
        std::uint32_t nb = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1U)
                for (int w : g.neighbors(v)) nb |= 1U << w;
        best = std::min(best, double(__builtin_popcount(nb & ~s)) / k);
    }
    return best;
}

}  // namespace

TEST_CASE("family constructors have the expected edge counts") {
    CHECK(path_graph(7).edges().size() == 6);
    CHECK(star_graph(9).edges().size() == 8);
    CHECK(complete_graph(6).edges().size() == 15);
    CHECK(grid_graph({4, 3}).edges().size() == 4 * 2 + 3 * 3);
    CHECK(tree_graph(2, 15).edges().size() == 14);
    CHECK(tree_graph(3, 13).edges().size() == 12);
    const Graph bw = brickwall_graph(2, 2, 3, 5);
    CHECK(bw.size() == 32);
    CHECK(is_connected(bw));
}

TEST_CASE("heap numbering of binary trees") {
    const Graph t = tree_graph(2, 15);
    for (int v = 0; v < 7; ++v) {
        CHECK(t.has_edge(v, 2 * v + 1));
        CHECK(t.has_edge(v, 2 * v + 2));
    }
    CHECK(diameter(t) == 6);
}

TEST_CASE("distances and shortest paths") {
    const Graph g = grid_graph({4, 3});
    CHECK(distance(g, 0, 11) == 5);
    const auto p = shortest_path(g, 0, 11);
    REQUIRE(p.size() == 6);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.has_edge(p[i], p[i + 1]));
    CHECK(diameter(path_graph(9)) == 8);
    CHECK(diameter(star_graph(9)) == 2);
}

TEST_CASE("disconnected explicit graphs are rejected") {
    CHECK_THROWS_AS(explicit_graph(4, {{0, 1}, {2, 3}}), DisconnectedGraph);
}

TEST_CASE("maximum matching agrees with exhaustive search") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 6;
        Graph g = random_connected_graph(n, 0.35, rng);
        if (g.edges().size() > 16) continue;
        const auto m = max_matching(g);
        CHECK(is_matching(g, m));
        CHECK(static_cast<int>(m.size()) == brute_matching(g));
    }
    CHECK(max_matching(star_graph(8)).size() == 1);
    CHECK(max_matching(complete_graph(7)).size() == 3);
}

TEST_CASE("vertex expansion agrees with exhaustive search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(4 + trial % 8, 0.3, rng);
        CHECK(vertex_expansion(g).value() == doctest::Approx(brute_expansion(g)));
    }
    CHECK(vertex_expansion(complete_graph(8)).value() == doctest::Approx(5.0 / 3.0));
    CHECK_THROWS_AS(vertex_expansion(path_graph(25)), TooLargeForExactExpansion);
}

TEST_CASE("expander cascade grows through matchings") {
    const Graph g = complete_graph(8);
    const auto c = expander_cascade(g, 1, 4);
    REQUIRE(c.length() >= 2);
    CHECK(c.last().size() == 4);
    for (int i = 0; i + 1 < c.length(); ++i) {
        std::set<int> s(c.sets[i].begin(), c.sets[i].end());
        for (auto [u, w] : c.matchings[i]) {
            CHECK(s.count(u) == 1);
            CHECK(s.count(w) == 0);
            CHECK(g.has_edge(u, w));
        }
    }
}

TEST_CASE("grid snake is a Hamiltonian path") {
    const std::vector<int> dims{4, 3, 2};
    const Graph g = grid_graph(dims);
    const auto h = hamiltonian_path_grid(dims);
    REQUIRE(static_cast<int>(h.size()) == g.size());
    CHECK(std::set<int>(h.begin(), h.end()).size() == h.size());
    for (std::size_t i = 0; i + 1 < h.size(); ++i) CHECK(g.has_edge(h[i], h[i + 1]));
}

TEST_CASE("prefix-connected orders") {
    const Graph g = tree_graph(3, 13);
    const auto o = bfs_order(g);
    for (std::size_t k = 1; k < o.size(); ++k) {
        bool touches = false;
        for (std::size_t j = 0; j < k; ++j) touches = touches || g.has_edge(o[j], o[k]);
        CHECK(touches);
    }
    const auto d = dfs_labeling(g);
    CHECK(d.parent[d.order.back()] == -1);
    CHECK(tree_distance(d.parent, 4, 12) == distance(g, 4, 12));
}
