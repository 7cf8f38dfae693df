// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/diag_ancilla.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/linear_synth.hpp"

namespace qgsynth {

namespace {

std::vector<int> iota_vec(int lo, int hi) {
    std::vector<int> v(std::max(0, hi - lo));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::vector<int> dfs_preorder(const Graph& g) {
    auto lab = dfs_labeling(g, 0);
    std::vector<int> out;
    for (int l = g.size() - 1; l >= 0; --l) out.push_back(lab.order[l]);
    return out;
}

bool layout_fits(int nd, int p, int avail) {
    if (p > nd - p && p > 0) return false;
    const int width = nd - p;
    const long long targets = 1LL << p;
    const long long blocks = (targets + width - 1) / width;
    return blocks * width + targets <= avail;
}

int floor_log2(double v) { return v < 1.0 ? 0 : static_cast<int>(std::floor(std::log2(v) + 1e-12)); }

bool binary_tree(const Graph& g) { return g.kind() == GraphKind::Tree && g.arity == 2; }

}  // namespace

std::vector<int> ancilla_order(const Graph& g, const std::vector<int>& ancilla) {
    std::vector<int> base;
    switch (g.kind()) {
        case GraphKind::Path: base = iota_vec(0, g.size()); break;
        case GraphKind::Grid: base = hamiltonian_path_grid(g.dims); break;
        default: base = dfs_preorder(g); break;
    }
    std::set<int> keep(ancilla.begin(), ancilla.end());
    std::vector<int> out;
    for (int v : base)
        if (keep.count(v)) out.push_back(v);
    return out;
}

RegisterLayout layout_for(const Graph& g, const std::vector<int>& data, const std::vector<int>& ancilla) {
    const int nd = static_cast<int>(data.size());
    const int avail = static_cast<int>(ancilla.size());
    if (nd < 1) throw InvalidParameters("layout needs at least one data qubit");
    int p = std::min(floor_log2(avail / 3.0), nd / 2);
    while (p >= 0 && !layout_fits(nd, p, avail)) --p;
    if (p < 0) throw InsufficientAncilla("ancilla register too small for one copy block");
    RegisterLayout L;
    L.kind = kind_name(g.kind());
    L.n = nd;
    L.m = avail;
    L.p = p;
    L.tau = 0;
    L.r_inp = data;
    const int width = nd - p;
    const int targets = 1 << p;
    auto order = ancilla_order(g, ancilla);
    std::size_t pos = 0;
    int assigned = 0;
    while (assigned < targets) {
        CopyBlock b;
        const int here = std::min(width, targets - assigned);
        for (int i = 0; i < width; ++i) {
            b.copy.push_back(order[pos++]);
            if (i < here) {
                int v = order[pos++];
                b.targets.push_back(v);
                L.r_targ.push_back(v);
                L.ell_plan.push_back(i + 1);
                L.block_of.push_back(static_cast<int>(L.blocks.size()));
            }
        }
        L.r_copy.insert(L.r_copy.end(), b.copy.begin(), b.copy.end());
        L.blocks.push_back(b);
        assigned += here;
    }
    L.unused = avail - static_cast<int>(pos);
    return L;
}

RegisterLayout fitted_layout(const Graph& g, int n, int m) {
    if (g.size() != n + m) throw InvalidParameters("graph must have n+m vertices");
    std::vector<int> anc = iota_vec(n, n + m);
    if (g.kind() == GraphKind::Path && m > 3 * (1 << n)) anc.resize(3 * (1 << n));
    return layout_for(g, iota_vec(0, n), anc);
}

RegisterLayout build_layout(const Graph& g, int n, int m) {
    if (m < 3 * n) throw InsufficientAncilla("ancilla framework needs m >= 3n");
    return fitted_layout(g, n, m);
}

Circuit StageTrace::concatenated() const {
    Circuit c(suf_copy.num_qubits);
    for (const Circuit* s : {&suf_copy, &gray_init, &pre_copy, &gray_cycle, &inverse}) c.append(*s);
    return c;
}

std::vector<std::pair<std::string, Metrics>> StageTrace::stage_metrics() const {
    return {{"SufCopy", metrics(suf_copy)},
            {"GrayInit", metrics(gray_init)},
            {"PreCopy", metrics(pre_copy)},
            {"GrayCycle", metrics(gray_cycle)},
            {"Inverse", metrics(inverse)}};
}

namespace {

StageTrace build_stages(const Graph& g, const RegisterLayout& L, const std::vector<double>& alpha) {
    const int N = g.size();
    const int nd = L.n, p = L.p, width = nd - p;
    if (alpha.size() != (std::size_t{1} << nd)) throw InvalidParameters("alpha must have 2^n entries");
    std::vector<int> suffix(L.r_inp.begin() + width, L.r_inp.end());
    std::vector<int> prefix(L.r_inp.begin(), L.r_inp.begin() + width);
    std::vector<std::vector<int>> suf_sinks, pre_sinks;
    for (const auto& b : L.blocks) {
        suf_sinks.emplace_back(b.copy.begin(), b.copy.begin() + p);
        pre_sinks.push_back(b.copy);
    }
    StageTrace t;
    Circuit suf = route_circuit(g, copy_register_logical(N, suffix, suf_sinks, CopyTopology::Path));
    Circuit pre = route_circuit(g, copy_register_logical(N, prefix, pre_sinks, CopyTopology::Path));
    t.suf_copy = suf;

    t.gray_init = Circuit(N);
    const int targets = static_cast<int>(L.r_targ.size());
    for (int k = 0; k < targets; ++k) {
        const auto& b = L.blocks[L.block_of[k]];
        for (int j = 1; j <= p; ++j)
            if ((k >> (p - j)) & 1) emit_cnot(t.gray_init, g, b.copy[j - 1], L.r_targ[k]);
    }

    t.pre_copy = compose_inverse(suf);
    t.pre_copy.append(pre);

    t.gray_cycle = Circuit(N);
    std::vector<char> used(alpha.size(), 0);
    std::map<int, GrayCode> codes;
    for (int l : L.ell_plan)
        if (!codes.count(l)) codes.emplace(l, gray_code(width, l));
    std::vector<std::uint64_t> cur(targets);
    for (int k = 0; k < targets; ++k) cur[k] = static_cast<std::uint64_t>(k);
    auto rotate_all = [&]() {
        for (int k = 0; k < targets; ++k) {
            if (cur[k] == 0) continue;
            if (used[cur[k]]) throw DecompositionFailure("phase coefficient applied twice");
            used[cur[k]] = 1;
            t.gray_cycle.r(L.r_targ[k], alpha[cur[k]]);
        }
    };
    auto flip_all = [&](std::size_t step) {
        for (int k = 0; k < targets; ++k) {
            int h = codes.at(L.ell_plan[k]).flips[step];
            emit_cnot(t.gray_cycle, g, L.blocks[L.block_of[k]].copy[h - 1], L.r_targ[k]);
            cur[k] ^= bit_mask(nd, h);
        }
    };
    const std::size_t steps = std::size_t{1} << width;
    rotate_all();
    for (std::size_t s = 1; s < steps; ++s) {
        flip_all(s);
        rotate_all();
    }
    flip_all(0);
    for (std::size_t s = 1; s < used.size(); ++s)
        if (!used[s]) throw DecompositionFailure("phase coefficient never applied");

    t.inverse = compose_inverse(pre);
    t.inverse.append(suf);
    t.inverse.append(compose_inverse(t.gray_init));
    t.inverse.append(compose_inverse(suf));
    return t;
}

}  // namespace

AncillaResult synth_diag_ancilla(const Graph& g, const DiagonalSpec& theta, int m, bool simulate) {
    const int n = theta.n;
    AncillaResult r;
    r.layout = fitted_layout(g, n, m);
    auto alpha = solve_phase_coefficients(theta).alpha;
    r.trace = build_stages(g, r.layout, alpha);
    r.circuit = r.trace.concatenated();
    r.circuit.ancilla = m;
    TargetSpec target = theta;
    r.report = assemble_report(r.circuit, g, simulate ? &target : nullptr, m, "ancilla/" + r.layout.kind);
    r.report.notes.push_back("p=" + std::to_string(r.layout.p) + " unused_ancilla=" + std::to_string(r.layout.unused));
    return r;
}

ExpanderCascade ancilla_cascade(const Graph& g, int n, int m) {
    if (m < 1) throw InsufficientAncilla("expander backend needs ancilla");
    std::vector<int> data = iota_vec(0, n);
    ExpanderCascade best;
    int best_p = -1, best_len = 0;
    for (int a = 1; a <= m; ++a) {
        std::vector<int> seed = iota_vec(n, n + a);
        for (int size = a; size <= m; ++size) {
            ExpanderCascade k;
            try {
                k = expander_cascade_from(g, seed, size, data);
            } catch (const GrowthStalled&) {
                break;
            }
            std::size_t start = k.length() >= 2 ? k.sets[k.length() - 2].size() : 0;
            int layer = static_cast<int>(k.sets.back().size() - start);
            int p = std::min(floor_log2(layer), n - 1);
            if (p > best_p || (p == best_p && k.length() < best_len)) {
                best = k;
                best_p = p;
                best_len = k.length();
            }
        }
    }
    if (g.size() <= 24) best.expansion = vertex_expansion(g);
    return best;
}

Circuit synth_diag_expander_ancilla(const Graph& g, const DiagonalSpec& theta, int m, const ExpanderCascade& cascade) {
    const int n = theta.n;
    if (g.size() != n + m) throw InvalidParameters("graph must have n+m vertices");
    for (const auto& s : cascade.sets)
        for (int v : s)
            if (v < n) throw InvalidParameters("cascade must avoid the data register");
    std::size_t start = cascade.length() >= 2 ? cascade.sets[cascade.length() - 2].size() : 0;
    std::vector<int> layer(cascade.sets.back().begin() + start, cascade.sets.back().end());
    const int p = std::min(floor_log2(static_cast<double>(layer.size())), n - 1);
    const int targets = 1 << p, width = n - p;
    auto alpha = solve_phase_coefficients(theta).alpha;
    Circuit init(g.size());
    for (int k = 0; k < targets; ++k)
        for (int j = 1; j <= p; ++j)
            if ((k >> (p - j)) & 1) emit_cnot(init, g, width + j - 1, layer[k]);
    Circuit cycle(g.size());
    std::vector<char> used(alpha.size(), 0);
    std::vector<std::uint64_t> cur(targets);
    for (int k = 0; k < targets; ++k) cur[k] = static_cast<std::uint64_t>(k);
    auto code = gray_code(width, 1);
    auto rotate_all = [&]() {
        for (int k = 0; k < targets; ++k) {
            if (cur[k] == 0) continue;
            if (used[cur[k]]) throw DecompositionFailure("phase coefficient applied twice");
            used[cur[k]] = 1;
            cycle.r(layer[k], alpha[cur[k]]);
        }
    };
    auto flip = [&](std::size_t step) {
        int h = code.flips[step];
        cycle.append(fanout_cascade(g, h - 1, cascade));
        for (auto& c : cur) c ^= bit_mask(n, h);
    };
    const std::size_t steps = std::size_t{1} << width;
    rotate_all();
    for (std::size_t s = 1; s < steps; ++s) {
        flip(s);
        rotate_all();
    }
    flip(0);
    for (std::size_t s = 1; s < used.size(); ++s)
        if (!used[s]) throw DecompositionFailure("phase coefficient never applied");
    Circuit out(g.size(), m);
    out.append(init);
    out.append(cycle);
    out.append(compose_inverse(init));
    return out;
}

std::string choose_backend(const Graph& g, int n, int m) {
    if (m > 0) {
        if (g.kind() == GraphKind::Path && m >= 3 * n) return "ancilla/path";
        if (binary_tree(g) && m >= 3 * n) return "ancilla/tree";
        if (g.kind() == GraphKind::Grid && m >= 36 * n) return "ancilla/grid";
    }
    if (m == 0) return "noancilla/" + strategy_name(resolve_strategy(g, DiagStrategy::Auto));
    return "noancilla/routed";
}

DiagResult synth_diag(const Graph& g, const DiagonalSpec& theta, int m, DiagStrategy strategy, bool simulate) {
    const int n = theta.n;
    if (g.size() != n + m) throw InvalidParameters("graph must have n+m vertices");
    if (m == 0) return synth_diag_noancilla(g, theta, {strategy, simulate});
    DiagResult r;
    TargetSpec target = theta;
    if (strategy == DiagStrategy::Expander) {
        resolve_strategy(g, strategy);
        r.circuit = synth_diag_expander_ancilla(g, theta, m, ancilla_cascade(g, n, m));
        r.report = assemble_report(r.circuit, g, simulate ? &target : nullptr, m, "ancilla/expander");
        return r;
    }
    std::string backend = choose_backend(g, n, m);
    if (backend.rfind("ancilla/", 0) == 0) {
        auto a = synth_diag_ancilla(g, theta, m, simulate);
        r.circuit = a.circuit;
        r.report = a.report;
        return r;
    }
    r.circuit = Circuit(g.size(), m);
    emit_phase_polynomial(r.circuit, g, iota_vec(0, n), solve_phase_coefficients(theta).alpha, DiagStrategy::Routed);
    r.report = assemble_report(r.circuit, g, simulate ? &target : nullptr, m, backend);
    if (g.kind() == GraphKind::Tree && !binary_tree(g))
        r.report.notes.push_back("d-ary tree ancilla layout not implemented; used the no-ancilla routed walk");
    else
        r.report.notes.push_back("ancilla below backend threshold; used the no-ancilla routed walk");
    return r;
}

std::string emit_diagonal(Circuit& c, const Graph& g, const std::vector<int>& data, const std::vector<double>& alpha,
                          const std::vector<int>& ancilla) {
    const int nd = static_cast<int>(data.size());
    const int m = static_cast<int>(ancilla.size());
    bool use = nd >= 2 && m >= 3 * nd &&
               (g.kind() == GraphKind::Path || binary_tree(g) || (g.kind() == GraphKind::Grid && m >= 36 * nd));
    if (use) {
        auto L = layout_for(g, data, ancilla);
        c.append(build_stages(g, L, alpha).concatenated());
        return "ancilla/" + L.kind;
    }
    bool whole = nd == g.size();
    for (int i = 0; whole && i < nd; ++i) whole = data[i] == i;
    DiagStrategy s = whole ? resolve_strategy(g, DiagStrategy::Auto) : DiagStrategy::Routed;
    emit_phase_polynomial(c, g, data, alpha, s);
    return "noancilla/" + strategy_name(s);
}

std::string encode_stage_trace(const StageTrace& t) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [name, m] : t.stage_metrics())
        j.push_back({{"stage", name}, {"depth", m.depth}, {"size", m.size}, {"two_qubit", m.two_qubit}});
    return j.dump(2);
}

}  // namespace qgsynth
