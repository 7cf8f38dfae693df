// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "qgsynth/errors.hpp"

namespace qgsynth {

std::string task_name(BoundTask t) {
    switch (t) {
        case BoundTask::Qsp: return "qsp";
        case BoundTask::Diag: return "diag";
        case BoundTask::Gus: return "gus";
    }
    return "qsp";
}

BoundTask parse_task(const std::string& s) {
    if (s == "qsp") return BoundTask::Qsp;
    if (s == "diag") return BoundTask::Diag;
    if (s == "gus") return BoundTask::Gus;
    throw InvalidParameters("unknown task '" + s + "'");
}

LightconeProfile lightcone_profile(const LayeredCircuit& lc, int n_inputs, bool open_wires) {
    const int q = lc.num_qubits;
    const int d = static_cast<int>(lc.layers.size());
    if (n_inputs < 0 || n_inputs > q) throw InvalidParameters("input count exceeds the register");
    // A wire carries an identity edge from the first single-qubit gate on it onwards.
    std::vector<int> first_single(q, open_wires ? 1 : d + 1);
    for (int i = 0; i < d && !open_wires; ++i)
        if (lc.layers[i].single_qubit)
            for (const Gate& g : lc.layers[i].gates) first_single[g.q0] = std::min(first_single[g.q0], i + 1);

    LightconeProfile prof;
    prof.sets.assign(d + 1, {});
    std::vector<char> reach(q, 0);
    for (int j = 0; j < n_inputs; ++j) {
        reach[j] = 1;
        prof.sets[d].push_back(j);
    }
    for (int i = d; i >= 1; --i) {
        const Layer& layer = lc.layers[i - 1];
        std::vector<char> acted(q, 0), next(q, 0);
        for (const Gate& g : layer.gates) {
            acted[g.q0] = 1;
            if (g.two_qubit()) {
                acted[g.q1] = 1;
                const char r = reach[g.q0] | reach[g.q1];
                next[g.q0] = next[g.q1] = r;
            }
        }
        for (int j = 0; j < q; ++j)
            if (!(acted[j] && !layer.single_qubit) && first_single[j] <= i) next[j] |= reach[j];
        for (int j = 0; j < q; ++j)
            if (next[j] && acted[j]) prof.sets[i - 1].push_back(j);
        reach.swap(next);
    }
    for (int i = 0; i < d; ++i) prof.budget += static_cast<long long>(prof.sets[i].size());
    return prof;
}

BudgetCheck lightcone_budget_check(const Circuit& c, BoundTask task, int n) {
    const LayeredCircuit lc = to_layered_form(c);
    const auto prof = lightcone_profile(lc, n, true);
    BudgetCheck out;
    out.budget = prof.budget;
    out.required = task == BoundTask::Gus ? (1LL << (2 * n)) - 1 : (1LL << n) - 1;
    out.pass = out.budget >= out.required;
    out.layered_depth = static_cast<int>(lc.layers.size());
    return out;
}

BoundReport depth_lower_bound(const Graph& g, BoundTask task, int n, int m) {
    if (m < 0 || n + m != g.size()) throw InvalidParameters("graph must have n+m vertices");
    const double base = task == BoundTask::Gus ? 4.0 : 2.0;
    const double full = std::pow(base, n);
    const double total = n + m;
    BoundReport b;
    b.nu = static_cast<int>(max_matching(g).size());
    b.terms["n"] = n;
    b.terms["matching"] = b.nu > 0 ? full / b.nu : full;
    std::map<std::string, double> fam;

    auto grid_terms = [&](std::vector<int> dims) {
        const int d = static_cast<int>(dims.size());
        fam["dimension"] = std::pow(base, double(n) / (d + 1));
        for (int j = 1; j <= d; ++j) {
            double prod = 1.0;
            for (int i = j; i <= d; ++i) prod *= dims[i - 1];
            fam["slab_" + std::to_string(j)] = std::pow(base, double(n) / j) / std::pow(prod, 1.0 / j);
        }
    };
    switch (g.kind()) {
        case GraphKind::Path: grid_terms({g.size()}); break;
        case GraphKind::Grid: grid_terms(g.dims); break;
        case GraphKind::Tree:
            fam["volume"] = (g.arity > 2 && g.arity < g.size() ? g.arity : 1) * full / total;
            break;
        case GraphKind::Star: fam["star"] = full; break;
        case GraphKind::Brickwall:
            fam["dimension"] = std::pow(base, n / 3.0);
            fam["slab_2"] = std::pow(base, n / 2.0) / std::sqrt(double(std::min(g.brick.n1, g.brick.n2)));
            fam["slab_1"] = full / total;
            break;
        case GraphKind::Explicit: break;
    }
    for (const auto& [k, v] : fam) {
        b.terms[k] = v;
        b.family_max = std::max(b.family_max, v);
    }
    for (const auto& [k, v] : b.terms) b.max = std::max(b.max, v);
    return b;
}

std::string encode_bound(const BoundReport& b) {
    nlohmann::json j;
    j["terms"] = b.terms;
    j["max"] = b.max;
    j["family_max"] = b.family_max;
    j["nu"] = b.nu;
    j["note"] = "asymptotic-form values with all constants set to 1";
    return j.dump();
}

}  // namespace qgsynth
