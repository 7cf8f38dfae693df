// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <cmath>

#include "doctest.h"
#include "qgsynth/circuit.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/sim.hpp"

using namespace qgsynth;

namespace {

double distance_to(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

Circuit sample() {
    Circuit c(3);
    c.h(0).cx(0, 1).rz(1, 0.3).ry(2, -1.1).cx(1, 2).s(0).r(2, 0.7).swap(0, 2).sdg(1).x(0);
    return c;
}

}  // namespace

TEST_CASE("metrics count depth size and two-qubit gates") {
    Circuit c(3);
    c.h(0).h(1).cx(0, 1).cx(1, 2).h(0);
    const Metrics m = metrics(c);
    CHECK(m.size == 5);
    CHECK(m.two_qubit == 2);
    CHECK(m.depth == 3);
    CHECK(cnot_count(c) == 2);
}

TEST_CASE("swap counts as three CNOTs") {
    Circuit c(2);
    c.swap(0, 1);
    CHECK(cnot_count(c) == 3);
    const Circuit e = expand_macros(c);
    CHECK(distance_to(simulate_unitary(c), simulate_unitary(e)) < 1e-12);
}

TEST_CASE("connectivity violations are reported by gate index") {
    Circuit c(3);
    c.cx(0, 1).cx(0, 2);
    const auto v = validate_connectivity(c, path_graph(3));
    REQUIRE(v.size() == 1);
    CHECK(v[0].gate_index == 1);
}

TEST_CASE("inverse composes to identity") {
    const Circuit c = sample();
    Circuit both = c;
    both.append(compose_inverse(c));
    const auto u = simulate_unitary(both);
    std::vector<cplx> id(64, 0.0);
    for (int i = 0; i < 8; ++i) id[i * 9] = 1.0;
    CHECK(distance_to(u, id) < 1e-12);
}

TEST_CASE("layered form alternates and preserves the operator") {
    const Circuit c = sample();
    const auto lc = to_layered_form(c);
    for (std::size_t i = 0; i < lc.layers.size(); ++i) {
        CHECK(lc.layers[i].single_qubit == (i % 2 == 0));
        std::vector<int> seen(3, 0);
        for (const auto& g : lc.layers[i].gates) {
            CHECK(++seen[g.q0] == 1);
            if (g.two_qubit()) CHECK(++seen[g.q1] == 1);
        }
    }
    CHECK(distance_to(simulate_unitary(from_layered_form(lc)), simulate_unitary(expand_macros(c))) < 1e-10);
}

TEST_CASE("JSON round trip") {
    Circuit c = sample();
    Mat2 u{cplx(0, 1), 0.0, 0.0, cplx(0, -1)};
    c.u2(1, u);
    c.ancilla = 1;
    const Circuit d = decode_circuit(encode_circuit(c));
    CHECK(d.num_qubits == 3);
    CHECK(d.ancilla == 1);
    CHECK(d.size() == c.size());
    CHECK(distance_to(simulate_unitary(c), simulate_unitary(d)) < 1e-12);
    CHECK_THROWS_AS(decode_circuit("{\"num_qubits\": 2"), ParseError);
}

TEST_CASE("mapped append relabels qubits") {
    Circuit a(2);
    a.cx(0, 1);
    Circuit b(4);
    b.append_mapped(a, {3, 1});
    REQUIRE(b.size() == 1);
    CHECK(b.gates[0].q0 == 3);
    CHECK(b.gates[0].q1 == 1);
}
