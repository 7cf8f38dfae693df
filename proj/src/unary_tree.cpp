// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/unary.hpp"

#include <cmath>
#include <numeric>

#include "qgsynth/errors.hpp"
#include "qgsynth/graphs.hpp"
#include "qgsynth/linear_synth.hpp"
#include "qgsynth/state_unitary.hpp"

namespace qgsynth {

namespace {

int tree_size(int n) { return (1 << (n + 1)) - 1; }

std::vector<int> iota_vec(int lo, int hi) {
    std::vector<int> v(std::max(0, hi - lo));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

}  // namespace

Circuit unary_qsp_tree(const StateSpec& v) {
    const int n = v.n;
    if (n < 1 || n > 12) throw InvalidParameters("unary tree supports 1 <= n <= 12");
    if (v.amp.size() != (std::size_t{1} << n)) throw InvalidParameters("state needs 2^n amplitudes");
    const int total = tree_size(n);
    const int first_leaf = (1 << n) - 1;
    // mass[z]: l2 norm of the amplitudes below vertex z.
    std::vector<double> mass(total, 0.0);
    for (int x = 0; x < (1 << n); ++x) mass[first_leaf + x] = std::abs(v.amp[x]);
    for (int z = first_leaf - 1; z >= 0; --z) mass[z] = std::hypot(mass[2 * z + 1], mass[2 * z + 2]);

    // Right child receives cos(beta), left child sin(beta) of the parent amplitude.
    std::vector<double> beta(first_leaf, 0.0);
    for (int z = 0; z < first_leaf; ++z) beta[z] = std::atan2(mass[2 * z + 1], mass[2 * z + 2]);

    Circuit c(total);
    c.x(0);
    for (int z = 0; z < first_leaf; ++z)
        if (beta[z] != 0.0) c.ry(2 * z + 2, beta[z]);
    for (int z = 0; z < first_leaf; ++z) {
        const int z0 = 2 * z + 1, z1 = 2 * z + 2;
        c.cx(z, z1);
        if (z > 0 && z % 2 == 1) c.cx(z, (z - 1) / 2);
        if (beta[z] != 0.0) c.ry(z1, -beta[z]);
        c.cx(z1, z);
        c.cx(z, z0);
    }
    for (int x = 0; x < (1 << n); ++x) {
        const int leaf = first_leaf + x;
        if (leaf % 2 == 1) c.cx(leaf, (leaf - 1) / 2);
        const double phase = std::arg(v.amp[x]);
        if (std::abs(v.amp[x]) > 0.0 && phase != 0.0) c.r(leaf, phase);
    }
    return c;
}

Circuit unary_to_binary(int n) {
    if (n < 1 || n > 5) throw InvalidParameters("unary conversion supports 1 <= n <= 5");
    const int total = tree_size(n);
    const int first_leaf = (1 << n) - 1;
    const Graph g = tree_graph(2, total);

    // Bit i of x is the parity of the leaves whose string has x_i = 1.
    F2Matrix fold = F2Matrix::identity(total);
    for (int i = 1; i <= n; ++i)
        for (int x = 0; x < (1 << n); ++x)
            if ((x >> (n - i)) & 1) fold.set(i - 1, first_leaf + x, true);
    Circuit c = synth_linear_f2(g, fold);
    c.num_qubits = total;

    const auto controls = iota_vec(0, n);
    const auto scratch = iota_vec(n, first_leaf);
    for (int x = 0; x < (1 << n); ++x) {
        std::string pattern(n, '0');
        for (int i = 1; i <= n; ++i)
            if ((x >> (n - i)) & 1) pattern[i - 1] = '1';
        c.append(multi_controlled_x(g, controls, pattern, first_leaf + x, scratch));
    }
    return c;
}

HybridPlan hybrid_plan(int n, int m) {
    HybridPlan plan;
    const double dim = std::ldexp(1.0, n);
    int fit = 0;
    while (fit < n && tree_size(fit + 1) <= n + m) ++fit;
    if (m == 0 || m < dim / (double(n) * n * n)) {
        plan.note = "cascade: ancilla below 2^n/n^3";
        return plan;
    }
    int t = 0;
    if (m < dim) {
        t = static_cast<int>(std::floor(n - 3.0 * std::log2(double(n))));
    } else {
        t = fit;
    }
    t = std::min({t, fit, n});
    if (t < 1) {
        plan.note = "cascade: unary tree does not fit";
        return plan;
    }
    plan.t = t;
    plan.note = "hybrid: unary prefix t=" + std::to_string(t);
    return plan;
}

Circuit qsp_tree_improved(const StateSpec& v, int m) {
    const int n = v.n;
    const Graph g = tree_graph(2, n + m);
    const auto plan = hybrid_plan(n, m);
    const auto ucgs = state_to_ucgs(v);
    const auto ancilla = iota_vec(n, n + m);
    Circuit c(n + m, m);
    if (plan.t > 0) {
        const int t = plan.t;
        StateSpec prefix;
        prefix.n = t;
        if (t == n) {
            prefix.amp = v.amp;
        } else {
            prefix.amp.assign(std::size_t{1} << t, 0.0);
            for (std::size_t x = 0; x < v.amp.size(); ++x) prefix.amp[x >> (n - t)] += std::norm(v.amp[x]);
            for (auto& a : prefix.amp) a = std::sqrt(a.real());
        }
        const auto map = iota_vec(0, tree_size(t));
        c.append_mapped(unary_qsp_tree(prefix), map);
        c.append_mapped(unary_to_binary(t), map);
    }
    for (int j = plan.t + 1; j <= n; ++j) emit_ucg(c, g, iota_vec(0, j), ucgs[j - 1], ancilla);
    return c;
}

}  // namespace qgsynth
