// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <benchmark/benchmark.h>

#include <random>

#include "qgsynth/diag_ancilla.hpp"
#include "qgsynth/sim.hpp"
#include "qgsynth/state_unitary.hpp"

using namespace qgsynth;

namespace {

Circuit layered_circuit(int nq, int depth) {
    Circuit c(nq);
    for (int d = 0; d < depth; ++d) {
        for (int q = 0; q < nq; ++q) c.ry(q, 0.1 * (q + 1) + d).rz(q, 0.05 * d);
        for (int q = d % 2; q + 1 < nq; q += 2) c.cx(q, q + 1);
    }
    return c;
}

void run_state(benchmark::State& st, KernelMode mode) {
    const int nq = static_cast<int>(st.range(0));
    const Circuit c = layered_circuit(nq, 8);
    for (auto _ : st) benchmark::DoNotOptimize(simulate_state(c, mode));
    st.SetItemsProcessed(st.iterations() * static_cast<long long>(c.size()));
}

void BM_StateSerial(benchmark::State& st) { run_state(st, KernelMode::Serial); }
void BM_StateParallel(benchmark::State& st) { run_state(st, KernelMode::Parallel); }

void BM_QspSynthesisPath(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::mt19937_64 rng(1);
    const auto v = random_state(n, rng);
    const Graph g = path_graph(n);
    for (auto _ : st) benchmark::DoNotOptimize(qsp_synthesize(g, v, 0, false));
}

void BM_DiagAncillaPath(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::mt19937_64 rng(2);
    const auto th = random_angles(n, rng);
    const Graph g = path_graph(n + 3 * (1 << (n / 2)));
    for (auto _ : st) benchmark::DoNotOptimize(synth_diag(g, th, g.size() - n, DiagStrategy::Auto, false));
}

}  // namespace

BENCHMARK(BM_StateSerial)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StateParallel)->DenseRange(14, 20, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_QspSynthesisPath)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiagAncillaPath)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
