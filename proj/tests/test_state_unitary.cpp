// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "qgsynth/errors.hpp"
#include "qgsynth/sim.hpp"
#include "qgsynth/state_unitary.hpp"
#include "qgsynth/unary.hpp"

using namespace qgsynth;

namespace {

// |<target|psi>| with psi from a sparse run on |0...0>; data qubits lead, ancilla must return to 0.
double fidelity(const Circuit& c, const StateSpec& v, int m, double* leak = nullptr) {
    const auto s = simulate_sparse(c, 0);
    cplx overlap = 0.0;
    double kept = 0.0;
    for (const auto& [idx, a] : s.amp) {
        if (idx & ((std::uint64_t{1} << m) - 1)) continue;
        kept += std::norm(a);
        overlap += std::conj(v.amp[idx >> m]) * a;
    }
    if (leak) *leak = 1.0 - kept;
    return std::norm(overlap);
}

// Frobenius distance between U and the circuit operator after fixing the global phase.
double operator_error(const Circuit& c, const UnitarySpec& u) {
    const auto w = simulate_unitary(c);
    const std::size_t dim = std::size_t{1} << u.n;
    cplx ip = 0.0;
    for (std::size_t i = 0; i < dim * dim; ++i) ip += std::conj(u.m[i]) * w[i];
    const cplx ph = ip / std::abs(ip);
    double s = 0.0;
    for (std::size_t i = 0; i < dim * dim; ++i) s += std::norm(w[i] - ph * u.m[i]);
    return std::sqrt(s);
}

std::vector<Graph> families(int total, std::mt19937_64& rng) {
    std::vector<Graph> out{path_graph(total), tree_graph(2, total), tree_graph(3, total), star_graph(total),
                           complete_graph(total), random_connected_graph(total, 0.15, rng)};
    if (total >= 4 && total % 2 == 0) out.push_back(grid_graph({total / 2, 2}));
    return out;
}

}  // namespace

TEST_CASE("UCG decomposition reconstructs the gate") {
    std::mt19937_64 rng(123);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 1 + rep % 5;
        const auto v = random_ucg(n, rng, rep % n);
        const auto want = ucg_matrix(v);
        const auto got = ucg_from_diagonals(ucg_to_diagonals(v));
        const cplx ph = got.m[0] / want.m[0];
        double err = std::abs(std::abs(ph) - 1.0);
        for (std::size_t i = 0; i < want.m.size(); ++i) err = std::max(err, std::abs(ph * want.m[i] - got.m[i]));
        CHECK(err <= 1e-9);
    }
}

TEST_CASE("UCG synthesis on constrained graphs") {
    std::mt19937_64 rng(8);
    for (int n = 2; n <= 5; ++n) {
        const Graph g = path_graph(n);
        const auto v = random_ucg(n, rng);
        const Circuit c = synth_ucg(g, v, 0);
        CHECK(validate_connectivity(c, g).empty());
        CHECK(operator_error(c, ucg_matrix(v)) <= 1e-9);
    }
}

TEST_CASE("state splits into a cascade of UCGs") {
    std::mt19937_64 rng(4);
    const auto v = random_state(4, rng);
    const auto ucgs = state_to_ucgs(v);
    REQUIRE(ucgs.size() == 4);
    for (int j = 0; j < 4; ++j) CHECK(ucgs[j].n == j + 1);
}

TEST_CASE("state preparation on every family") {
    std::mt19937_64 rng(77);
    for (int n = 2; n <= 6; ++n) {
        for (int m : {0, 3 * n}) {
            for (const Graph& g : families(n + m, rng)) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(kind_name(g.kind()));
                const auto v = random_state(n, rng);
                const auto res = qsp_synthesize(g, v, m, false);
                CHECK(validate_connectivity(res.circuit, g).empty());
                double leak = 0.0;
                CHECK(fidelity(res.circuit, v, m, &leak) >= 1 - 1e-9);
                CHECK(leak <= 1e-10);
            }
        }
    }
}

TEST_CASE("general unitaries") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 4; ++n) {
        const auto u = random_unitary(n, rng);
        CHECK(is_unitary(u));
        CHECK(unitary_to_ucgs(u).size() == (std::size_t{1} << n) - 1);
        for (const Graph& g : {path_graph(n), star_graph(n), complete_graph(n)}) {
            const auto res = gus_synthesize(g, u, 0, false);
            CHECK(validate_connectivity(res.circuit, g).empty());
            CHECK(operator_error(res.circuit, u) <= 1e-7);
        }
    }
}

TEST_CASE("unary tree prepares the unary encoding") {
    std::mt19937_64 rng(12);
    std::vector<int> depth;
    for (int n = 1; n <= 4; ++n) {
        const auto v = random_state(n, rng);
        const Circuit c = unary_qsp_tree(v);
        const Graph t = tree_graph(2, (2 << n) - 1);
        REQUIRE(c.num_qubits == t.size());
        CHECK(validate_connectivity(c, t).empty());
        const auto s = simulate_sparse(c, 0);
        cplx overlap = 0.0;
        for (std::uint64_t x = 0; x < v.amp.size(); ++x) {
            const std::uint64_t idx = qubit_bit(t.size(), (1 << n) - 1 + static_cast<int>(x));
            auto it = s.amp.find(idx);
            if (it != s.amp.end()) overlap += std::conj(v.amp[x]) * it->second;
        }
        CHECK(std::norm(overlap) >= 1 - 1e-10);
        depth.push_back(metrics(c).depth);
    }
    for (std::size_t i = 2; i < depth.size(); ++i) CHECK(depth[i] - depth[i - 1] == depth[1] - depth[0]);
}

TEST_CASE("unary to binary conversion") {
    for (int n = 1; n <= 3; ++n) {
        const Circuit c = unary_to_binary(n);
        const Graph t = tree_graph(2, (2 << n) - 1);
        CHECK(validate_connectivity(c, t).empty());
        for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
            const std::uint64_t in = qubit_bit(t.size(), (1 << n) - 1 + static_cast<int>(x));
            std::uint64_t want = 0;
            for (int i = 1; i <= n; ++i)
                if ((x >> (n - i)) & 1U) want |= qubit_bit(t.size(), i - 1);
            const auto s = simulate_sparse(c, in);
            auto it = s.amp.find(want);
            REQUIRE(it != s.amp.end());
            CHECK(std::abs(it->second) == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("hybrid tree preparation") {
    std::mt19937_64 rng(21);
    CHECK(hybrid_plan(3, 0).t == 0);
    CHECK(hybrid_plan(3, 12).t == 3);
    for (int m : {0, 3, 12}) {
        const auto v = random_state(3, rng);
        const Circuit c = qsp_tree_improved(v, m);
        CHECK(validate_connectivity(c, tree_graph(2, 3 + m)).empty());
        double leak = 0.0;
        CHECK(fidelity(c, v, m, &leak) >= 1 - 1e-9);
        CHECK(leak <= 1e-10);
    }
}
