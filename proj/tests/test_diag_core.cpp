// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qgsynth/diag.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/linear_synth.hpp"
#include "qgsynth/sim.hpp"

using namespace qgsynth;

namespace {

DiagonalSpec random_theta(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-std::numbers::pi, std::numbers::pi);
    std::vector<double> t(std::size_t{1} << n);
    for (double& v : t) v = d(rng);
    return normalize_diagonal(n, t);
}

// Largest entrywise deviation from diag(e^{i theta}) after removing the global phase.
double diagonal_error(const Circuit& c, const DiagonalSpec& th) {
    const auto u = simulate_unitary(c);
    const std::size_t dim = th.theta.size();
    const cplx g = u[0];
    double worst = 0.0;
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t col = 0; col < dim; ++col) {
            const cplx want = r == col ? g * std::polar(1.0, th.theta[r]) : cplx(0.0);
            worst = std::max(worst, std::abs(u[r * dim + col] - want));
        }
    return worst;
}

int rank_f2(std::vector<std::uint64_t> v) {
    int r = 0;
    for (int bitpos = 63; bitpos >= 0; --bitpos) {
        auto it = std::find_if(v.begin() + r, v.end(), [&](std::uint64_t x) { return (x >> bitpos) & 1U; });
        if (it == v.end()) continue;
        std::swap(*it, v[r]);
        for (std::size_t k = 0; k < v.size(); ++k)
            if (k != std::size_t(r) && ((v[k] >> bitpos) & 1U)) v[k] ^= v[r];
        ++r;
    }
    return r;
}

void check_family(const Graph& g, DiagStrategy s, std::mt19937_64& rng) {
    const int n = g.size();
    const auto th = random_theta(n, rng);
    DiagOptions opt;
    opt.strategy = s;
    opt.simulate = false;
    const auto res = synth_diag_noancilla(g, th, opt);
    CHECK(validate_connectivity(res.circuit, g).empty());
    CHECK(diagonal_error(res.circuit, th) <= 1e-8);
    CHECK(metrics(res.circuit).size <= 16LL << n);
}

}  // namespace

TEST_CASE("independent covers span every nonzero suffix") {
    CHECK(independent_cover(1).length() == 1);
    for (int r = 1; r <= 10; ++r) {
        const auto cov = independent_cover(r);
        std::set<std::uint64_t> seen;
        for (int k = 0; k < cov.length(); ++k) {
            REQUIRE(static_cast<int>(cov.sets[k].size()) == r);
            CHECK(rank_f2(cov.sets[k]) == r);
            for (int i = 0; i < r; ++i) {
                const bool is_new = seen.insert(cov.sets[k][i]).second;
                CHECK(is_new == bool(cov.fresh[k][i]));
            }
        }
        CHECK(seen.size() == (std::size_t{1} << r) - 1);
        CHECK(cov.length() <= 8.0 * std::ldexp(1.0, r) / (r + 1));
    }
}

TEST_CASE("unconstrained Gray walk") {
    std::mt19937_64 rng(10);
    for (int n = 1; n <= 6; ++n) {
        const auto th = random_theta(n, rng);
        const Circuit c = synth_diag_gray_walk(th);
        int rot = 0;
        for (const auto& g : c.gates) rot += g.kind == GateKind::R;
        CHECK(rot == (1 << n) - 1);
        CHECK(cnot_count(c) <= (1 << n));
        CHECK(diagonal_error(c, th) <= 1e-10);
    }
    const Circuit one = synth_diag_gray_walk(DiagonalSpec{1, {0.0, 0.7}});
    REQUIRE(one.size() == 1);
    CHECK(one.gates[0].theta == doctest::Approx(0.7));
}

TEST_CASE("no-ancilla diagonals on every family") {
    std::mt19937_64 rng(42);
    for (int n = 2; n <= 8; ++n) {
        CAPTURE(n);
        check_family(path_graph(n), DiagStrategy::Auto, rng);
        check_family(tree_graph(2, n), DiagStrategy::Auto, rng);
        check_family(tree_graph(3, n), DiagStrategy::Auto, rng);
        check_family(star_graph(n), DiagStrategy::Auto, rng);
        check_family(complete_graph(n), DiagStrategy::Auto, rng);
        check_family(random_connected_graph(n, 0.2, rng), DiagStrategy::Auto, rng);
        check_family(random_connected_graph(n, 0.2, rng), DiagStrategy::General, rng);
    }
    check_family(grid_graph({3, 2}), DiagStrategy::Auto, rng);
    check_family(complete_graph(8), DiagStrategy::Expander, rng);
}

TEST_CASE("zero phases give the identity") {
    const Graph g = path_graph(5);
    const DiagonalSpec zero{5, std::vector<double>(32, 0.0)};
    const auto res = synth_diag_noancilla(g, zero);
    CHECK(diagonal_error(res.circuit, zero) <= 1e-12);
    REQUIRE(res.report.residual);
    CHECK(*res.report.residual <= 1e-12);
}

TEST_CASE("path framework beats the routed Gray walk") {
    std::mt19937_64 rng(6);
    const Graph g = path_graph(6);
    const auto th = random_theta(6, rng);
    const auto res = synth_diag_noancilla(g, th);
    const Circuit naive = route_circuit(g, synth_diag_gray_walk(th));
    CHECK(metrics(res.circuit).size <= 16 * 64);
    CHECK(metrics(res.circuit).depth < metrics(naive).depth);
}

TEST_CASE("path split parameters") {
    const auto sp = plan_split(path_graph(8), {0, 1, 2, 3, 4, 5, 6, 7}, DiagStrategy::Path);
    CHECK(sp.r_c + sp.r_t == 8);
    CHECK(sp.r_t >= 1);
    CHECK((8 - sp.tau) % 2 == 0);
    CHECK(sp.control.size() == std::size_t(sp.r_c));
    for (int j : sp.gray_plan) {
        CHECK(j >= 1);
        CHECK(j <= sp.r_c);
    }
}

TEST_CASE("strategy checks") {
    std::mt19937_64 rng(1);
    const auto th = random_theta(4, rng);
    DiagOptions opt;
    opt.strategy = DiagStrategy::Path;
    CHECK_THROWS_AS(synth_diag_noancilla(star_graph(4), th, opt), StrategyGraphMismatch);
    CHECK(parse_strategy(strategy_name(DiagStrategy::Tree)) == DiagStrategy::Tree);
    CHECK_THROWS_AS(parse_strategy("nope"), InvalidParameters);
}
