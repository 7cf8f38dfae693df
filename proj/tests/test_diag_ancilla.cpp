// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qgsynth/diag_ancilla.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/sim.hpp"

using namespace qgsynth;

namespace {

DiagonalSpec random_theta(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-std::numbers::pi, std::numbers::pi);
    std::vector<double> t(std::size_t{1} << n);
    for (double& v : t) v = d(rng);
    return normalize_diagonal(n, t);
}

struct Check {
    double phase_error = 0.0;
    double leak = 0.0;
};

// Runs every data basis input with clean ancilla and compares against e^{i theta(x)}.
Check run_basis(const Circuit& c, const DiagonalSpec& th, int m) {
    Check out;
    cplx global{};
    for (std::uint64_t x = 0; x < th.theta.size(); ++x) {
        const std::uint64_t in = x << m;
        const auto psi = simulate_basis(c, in);
        const cplx a = psi[in];
        out.leak = std::max(out.leak, 1.0 - std::norm(a));
        if (x == 0) global = a;
        out.phase_error = std::max(out.phase_error, std::abs(a - global * std::polar(1.0, th.theta[x])));
    }
    return out;
}

}  // namespace

TEST_CASE("register layouts are disjoint and sized") {
    for (int n = 3; n <= 5; ++n) {
        const int m = 3 * n;
        for (const Graph& g : {path_graph(n + m), tree_graph(2, n + m)}) {
            const auto lay = build_layout(g, n, m);
            std::set<int> all;
            auto add = [&](const std::vector<int>& v) {
                for (int q : v) CHECK(all.insert(q).second);
            };
            add(lay.r_inp);
            add(lay.r_copy);
            add(lay.r_targ);
            add(lay.r_aux);
            CHECK(lay.r_inp.size() == std::size_t(n));
            CHECK(lay.p >= 1);
            CHECK(lay.p <= n / 2 + 1);
            CHECK(lay.r_targ.size() == (std::size_t{1} << lay.p));
            CHECK(static_cast<int>(all.size()) + lay.unused == n + m);
        }
    }
    CHECK_THROWS_AS(build_layout(path_graph(10), 4, 6), InsufficientAncilla);
}

TEST_CASE("path and tree ancilla backends") {
    std::mt19937_64 rng(99);
    for (int n = 3; n <= 5; ++n) {
        for (int m = 3 * n; n + m <= 14; m += 2) {
            for (const Graph& g : {path_graph(n + m), tree_graph(2, n + m)}) {
                CAPTURE(n);
                CAPTURE(m);
                const auto th = random_theta(n, rng);
                const auto res = synth_diag_ancilla(g, th, m, false);
                CHECK(res.report.backend.rfind("ancilla/", 0) == 0);
                CHECK(validate_connectivity(res.circuit, g).empty());
                const auto chk = run_basis(res.circuit, th, m);
                CHECK(chk.phase_error <= 1e-8);
                CHECK(chk.leak <= 1e-10);
            }
        }
    }
}

TEST_CASE("stage trace concatenates to the circuit") {
    std::mt19937_64 rng(3);
    const Graph g = path_graph(16);
    const auto th = random_theta(4, rng);
    const auto res = synth_diag_ancilla(g, th, 12, true);
    CHECK(res.trace.concatenated().size() == res.circuit.size());
    const auto stages = res.trace.stage_metrics();
    CHECK(stages.size() == 5);
    REQUIRE(res.report.residual);
    CHECK(*res.report.residual <= 1e-8);
    CHECK(res.report.ancilla_restored);
}

TEST_CASE("expander ancilla backend on a complete graph") {
    std::mt19937_64 rng(17);
    const Graph g = complete_graph(6);
    const auto th = random_theta(3, rng);
    const auto res = synth_diag(g, th, 3, DiagStrategy::Expander, false);
    CHECK(res.report.backend == "ancilla/expander");
    CHECK(validate_connectivity(res.circuit, g).empty());
    const auto chk = run_basis(res.circuit, th, 3);
    CHECK(chk.phase_error <= 1e-8);
    CHECK(chk.leak <= 1e-10);
}

TEST_CASE("dispatch falls back below the ancilla threshold") {
    CHECK(choose_backend(path_graph(8), 4, 4) == "noancilla/routed");
    CHECK(choose_backend(path_graph(16), 4, 12) == "ancilla/path");
    CHECK(choose_backend(tree_graph(2, 15), 3, 12) == "ancilla/tree");
    std::mt19937_64 rng(5);
    const Graph g = path_graph(7);
    const auto th = random_theta(4, rng);
    const auto res = synth_diag(g, th, 3);
    REQUIRE(res.report.residual);
    CHECK(*res.report.residual <= 1e-8);
    CHECK(run_basis(res.circuit, th, 3).leak <= 1e-10);
}

TEST_CASE("mismatched sizes are rejected") {
    std::mt19937_64 rng(5);
    CHECK_THROWS_AS(synth_diag(path_graph(9), random_theta(4, rng), 4), InvalidParameters);
}
