// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "qgsynth/diag.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/linear_synth.hpp"

namespace qgsynth {

namespace {

// Reduced XOR basis keyed by leading bit.
struct XorBasis {
    std::vector<std::uint64_t> rows;

    bool independent(std::uint64_t v) const {
        for (std::uint64_t r : rows) v = std::min(v, v ^ r);
        return v != 0;
    }
    void add(std::uint64_t v) {
        for (std::uint64_t r : rows) v = std::min(v, v ^ r);
        rows.push_back(v);
        std::sort(rows.rbegin(), rows.rend());
    }
};

int ceil_log2(int n) {
    int k = 0;
    while ((1 << k) < n) ++k;
    return k;
}

std::vector<std::vector<int>> distance_rows(const Graph& g, const std::vector<int>& vertices) {
    std::vector<std::vector<int>> d;
    d.reserve(vertices.size());
    for (int v : vertices) d.push_back(bfs_distances(g, v));
    return d;
}

double cnot_cost(int d) { return d <= 1 ? 1.0 : 4.0 * d - 4.0; }

// Orders `pool` by distance from `from`, ties by position in pool.
std::vector<int> by_distance(const std::vector<int>& dist, std::vector<int> pool) {
    std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) { return dist[a] < dist[b]; });
    return pool;
}

RegisterSplit finish(RegisterSplit s) {
    s.r_c = static_cast<int>(s.control.size());
    s.r_t = static_cast<int>(s.target.size());
    if (s.gray_plan.empty()) s.gray_plan.assign(s.r_t, 1);
    return s;
}

// Single target at the vertex that minimizes the expected routed cost of its walk.
RegisterSplit routed_split(const Graph& g, const std::vector<int>& q) {
    auto dist = distance_rows(g, q);
    int best = 0;
    double best_cost = 1e300;
    for (std::size_t a = 0; a < q.size(); ++a) {
        std::vector<int> ds;
        for (std::size_t b = 0; b < q.size(); ++b)
            if (b != a) ds.push_back(dist[a][q[b]]);
        std::sort(ds.begin(), ds.end());
        double cost = 0.0, w = 0.5;
        for (int d : ds) {
            cost += w * cnot_cost(d);
            w *= 0.5;
        }
        if (cost < best_cost - 1e-12) {
            best_cost = cost;
            best = static_cast<int>(a);
        }
    }
    RegisterSplit s;
    s.target = {q[best]};
    std::vector<int> rest;
    for (std::size_t b = 0; b < q.size(); ++b)
        if (static_cast<int>(b) != best) rest.push_back(q[b]);
    s.control = by_distance(dist[best], rest);
    return finish(s);
}

// Targets each own a block of nearby controls; gray_plan points at the block start.
RegisterSplit block_split(const Graph& g, const std::vector<int>& targets,
                          const std::vector<std::vector<int>>& blocks, const std::vector<int>& leftover) {
    RegisterSplit s;
    s.target = targets;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto dist = bfs_distances(g, targets[i]);
        auto ordered = by_distance(dist, blocks[i]);
        s.gray_plan.push_back(static_cast<int>(s.control.size()) + 1);
        s.control.insert(s.control.end(), ordered.begin(), ordered.end());
    }
    s.control.insert(s.control.end(), leftover.begin(), leftover.end());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (blocks[i].empty()) {
            auto dist = bfs_distances(g, targets[i]);
            int best = 0;
            for (int k = 1; k < static_cast<int>(s.control.size()); ++k)
                if (dist[s.control[k]] < dist[s.control[best]]) best = k;
            s.gray_plan[i] = best + 1;
        }
    }
    return finish(s);
}

int path_targets(int n, int* tau_out) {
    int tau = 2 * ceil_log2(n);
    if ((n - tau) % 2 != 0) ++tau;
    tau = std::min(tau, n - 2);
    if (tau < 0) tau = 0;
    if ((n - tau) % 2 != 0) ++tau;
    *tau_out = tau;
    return std::max(1, (n - tau) / 2);
}

RegisterSplit path_like_split(const Graph& g, const std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    int tau = 0;
    int r_t = path_targets(n, &tau);
    if (r_t <= 1) {
        auto s = routed_split(g, order);
        s.tau = tau;
        return s;
    }
    std::vector<int> targets;
    std::vector<std::vector<int>> blocks;
    const int width = n / r_t;
    for (int i = 0; i < r_t; ++i) {
        int lo = i * width, hi = (i + 1 == r_t) ? n : lo + width;
        int mid = (lo + hi - 1) / 2;
        targets.push_back(order[mid]);
        std::vector<int> b;
        for (int p = lo; p < hi; ++p)
            if (p != mid) b.push_back(order[p]);
        blocks.push_back(b);
    }
    auto s = block_split(g, targets, blocks, {});
    s.tau = tau;
    return s;
}

RegisterSplit binary_tree_split(const Graph& g) {
    const int n = g.size();
    auto depth = bfs_distances(g, 0);
    const int max_depth = *std::max_element(depth.begin(), depth.end());
    int a = n >= 2 ? ceil_log2(std::max(2, 2 * ceil_log2(n))) : 0;
    a = std::clamp(a, 0, std::max(0, max_depth - 1));
    const int level = max_depth - a;
    std::vector<int> targets;
    for (int v = 0; v < n; ++v)
        if (depth[v] == level) targets.push_back(v);
    if (static_cast<int>(targets.size()) >= n) return routed_split(g, bfs_order(g));
    std::vector<std::vector<int>> blocks(targets.size());
    std::vector<int> owner(n, -1), leftover;
    for (std::size_t i = 0; i < targets.size(); ++i) owner[targets[i]] = static_cast<int>(i);
    for (int v : bfs_order(g)) {
        if (depth[v] <= level) {
            if (owner[v] < 0) leftover.push_back(v);
            continue;
        }
        int p = (v - 1) / g.arity;
        owner[v] = owner[p];
        blocks[owner[v]].push_back(v);
    }
    return block_split(g, targets, blocks, leftover);
}

int fanout_width(int n) { return std::max(1, static_cast<int>(std::floor(std::log2(std::max(n, 1)))) - 1); }

RegisterSplit expander_split(const Graph& g, const std::vector<int>& q) {
    const int n = static_cast<int>(q.size());
    const int want = fanout_width(n);
    std::vector<char> inq(g.size(), 0);
    for (int v : q) inq[v] = 1;
    std::vector<int> forbidden;
    for (int v = 0; v < g.size(); ++v)
        if (!inq[v]) forbidden.push_back(v);
    ExpanderCascade best = expander_cascade_from(g, {q[0]}, 1, forbidden);
    for (int size = 2; 2 * size <= n; ++size) {
        ExpanderCascade k;
        try {
            k = expander_cascade_from(g, {q[0]}, size, forbidden);
        } catch (const GrowthStalled&) {
            break;
        }
        int layer = k.length() >= 2 ? static_cast<int>(k.sets.back().size() - k.sets[k.length() - 2].size())
                                    : static_cast<int>(k.sets.back().size());
        best = k;
        if (layer >= want) break;
    }
    RegisterSplit s;
    const auto& fin = best.sets.back();
    std::size_t start = best.length() >= 2 ? best.sets[best.length() - 2].size() : 0;
    s.target.assign(fin.begin() + start, fin.end());
    std::vector<char> interior(g.size(), 0), is_target(g.size(), 0);
    for (std::size_t i = 0; i < start; ++i) interior[fin[i]] = 1;
    for (int t : s.target) is_target[t] = 1;
    auto dist = bfs_distances(g, q[0]);
    std::vector<int> outer, inner;
    for (int v : q) {
        if (is_target[v]) continue;
        (interior[v] ? inner : outer).push_back(v);
    }
    s.control = by_distance(dist, outer);
    s.control.insert(s.control.end(), inner.begin(), inner.end());
    s.mode = s.target.size() > 1 ? StepMode::Cascade : StepMode::Individual;
    s.cascade = best;
    return finish(s);
}

RegisterSplit general_split(const Graph& g) {
    const int n = g.size();
    auto lab = dfs_labeling(g, 0);
    const int want = std::min(fanout_width(n), n - 1);
    RegisterSplit s;
    std::vector<char> is_target(n, 0);
    for (int i = 0; i < want; ++i) {
        int v = lab.order[n - 2 - i];
        s.target.push_back(v);
        is_target[v] = 1;
    }
    std::vector<int> rest;
    for (int l = n - 1; l >= 0; --l)
        if (!is_target[lab.order[l]]) rest.push_back(lab.order[l]);
    s.control = by_distance(bfs_distances(g, s.target[0]), rest);
    s.mode = s.target.size() > 1 ? StepMode::Chain : StepMode::Individual;
    return finish(s);
}

bool covers_graph(const Graph& g, const std::vector<int>& q) {
    if (static_cast<int>(q.size()) != g.size()) return false;
    for (int i = 0; i < g.size(); ++i)
        if (q[i] != i) return false;
    return true;
}

std::uint64_t target_mask(std::uint64_t t, const std::vector<std::uint64_t>& tbit) {
    std::uint64_t m = 0;
    const int r_t = static_cast<int>(tbit.size());
    for (int i = 0; i < r_t; ++i)
        if ((t >> (r_t - 1 - i)) & 1U) m ^= tbit[i];
    return m;
}

F2Matrix generator(const std::vector<std::uint64_t>& set, int r_t) {
    F2Matrix m;
    m.n = r_t;
    m.rows.assign(r_t, 0);
    for (int i = 0; i < r_t; ++i)
        for (int j = 0; j < r_t; ++j)
            if ((set[i] >> (r_t - 1 - j)) & 1U) m.rows[i] |= std::uint64_t{1} << j;
    return m;
}

}  // namespace

IndependentCover independent_cover(int r_t) {
    if (r_t < 1 || r_t > 24) throw InvalidParameters("independent_cover: r_t must lie in [1,24]");
    IndependentCover cov;
    cov.r_t = r_t;
    const std::uint64_t total = std::uint64_t{1} << r_t;
    std::vector<char> covered(total, 0);
    std::uint64_t left = total - 1;
    while (left > 0) {
        XorBasis b;
        std::vector<std::uint64_t> set;
        std::vector<char> fresh;
        for (std::uint64_t s = 1; s < total && static_cast<int>(set.size()) < r_t; ++s) {
            if (!covered[s] && b.independent(s)) {
                b.add(s);
                set.push_back(s);
                fresh.push_back(1);
            }
        }
        for (std::uint64_t s = 1; s < total && static_cast<int>(set.size()) < r_t; ++s) {
            if (covered[s] && b.independent(s)) {
                b.add(s);
                set.push_back(s);
                fresh.push_back(0);
            }
        }
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (fresh[i]) {
                covered[set[i]] = 1;
                --left;
            }
        }
        cov.sets.push_back(set);
        cov.fresh.push_back(fresh);
    }
    return cov;
}

Circuit synth_diag_gray_walk(const DiagonalSpec& theta) {
    const int n = theta.n;
    if (n < 1 || n > 20) throw InvalidParameters("synth_diag_gray_walk: n must lie in [1,20]");
    auto alpha = solve_phase_coefficients(theta).alpha;
    Circuit c(n);
    for (int k = 1; k <= n; ++k) {
        std::uint64_t s = bit_mask(n, k);
        c.r(k - 1, alpha[s]);
        if (k == 1) continue;
        auto code = gray_code(k - 1, 1);
        const std::size_t len = code.flips.size();
        for (std::size_t p = 1; p < len; ++p) {
            int h = code.flips[p];
            c.cx(h - 1, k - 1);
            s ^= bit_mask(n, h);
            c.r(k - 1, alpha[s]);
        }
        c.cx(code.flips[0] - 1, k - 1);
    }
    return c;
}

std::string strategy_name(DiagStrategy s) {
    switch (s) {
        case DiagStrategy::Auto: return "auto";
        case DiagStrategy::Path: return "path";
        case DiagStrategy::Grid: return "grid";
        case DiagStrategy::Tree: return "tree";
        case DiagStrategy::Star: return "star";
        case DiagStrategy::Expander: return "expander";
        case DiagStrategy::General: return "general";
        case DiagStrategy::Routed: return "routed";
    }
    return "auto";
}

DiagStrategy parse_strategy(const std::string& s) {
    for (auto k : {DiagStrategy::Auto, DiagStrategy::Path, DiagStrategy::Grid, DiagStrategy::Tree, DiagStrategy::Star,
                   DiagStrategy::Expander, DiagStrategy::General, DiagStrategy::Routed})
        if (strategy_name(k) == s) return k;
    throw InvalidParameters("unknown strategy '" + s + "'");
}

DiagStrategy resolve_strategy(const Graph& g, DiagStrategy requested) {
    const GraphKind k = g.kind();
    switch (requested) {
        case DiagStrategy::Auto:
            switch (k) {
                case GraphKind::Path: return DiagStrategy::Path;
                case GraphKind::Grid: return DiagStrategy::Grid;
                case GraphKind::Tree: return DiagStrategy::Tree;
                case GraphKind::Star: return DiagStrategy::Star;
                default: return DiagStrategy::General;
            }
        case DiagStrategy::Path:
            if (k != GraphKind::Path) throw StrategyGraphMismatch("path strategy needs a path graph");
            return requested;
        case DiagStrategy::Grid:
            if (k != GraphKind::Grid) throw StrategyGraphMismatch("grid strategy needs a grid graph");
            return requested;
        case DiagStrategy::Tree:
            if (k != GraphKind::Tree) throw StrategyGraphMismatch("tree strategy needs a tree graph");
            return requested;
        case DiagStrategy::Star:
            if (k != GraphKind::Star) throw StrategyGraphMismatch("star strategy needs a star graph");
            return requested;
        case DiagStrategy::Expander: {
            if (g.size() > 24) throw ExpansionUnknown("vertex expansion is only certified up to 24 vertices");
            if (g.size() >= 3 && vertex_expansion(g).num <= 0)
                throw ExpansionUnknown("graph has zero vertex expansion");
            return requested;
        }
        default: return requested;
    }
}

RegisterSplit plan_split(const Graph& g, const std::vector<int>& qubits, DiagStrategy strategy) {
    if (qubits.size() < 2) throw InvalidParameters("a register split needs at least two qubits");
    const bool whole = covers_graph(g, qubits);
    switch (strategy) {
        case DiagStrategy::Path:
            if (whole) return path_like_split(g, qubits);
            break;
        case DiagStrategy::Grid:
            if (whole) return path_like_split(g, hamiltonian_path_grid(g.dims));
            break;
        case DiagStrategy::Tree:
            if (whole && g.arity == 2) return binary_tree_split(g);
            break;
        case DiagStrategy::Expander: return expander_split(g, qubits);
        case DiagStrategy::General:
            if (whole) return general_split(g);
            break;
        default: break;
    }
    return routed_split(g, qubits);
}

FrameworkParts build_framework(const Graph& g, const std::vector<int>& qubits, const std::vector<double>& alpha,
                               const RegisterSplit& split) {
    const int n = static_cast<int>(qubits.size());
    if (alpha.size() != (std::size_t{1} << n)) throw InvalidParameters("alpha must have 2^n entries");
    if (split.r_c < 1 || split.r_t < 1 || split.r_c + split.r_t != n)
        throw InvalidParameters("register split must cover the register with r_c, r_t >= 1");
    std::map<int, int> index_of;
    for (int i = 0; i < n; ++i) index_of[qubits[i]] = i;
    auto mask_of = [&](int v) { return bit_mask(n, index_of.at(v) + 1); };
    std::vector<std::uint64_t> cbit(split.r_c + 1, 0), tbit(split.r_t);
    for (int k = 1; k <= split.r_c; ++k) cbit[k] = mask_of(split.control[k - 1]);
    for (int i = 0; i < split.r_t; ++i) tbit[i] = mask_of(split.target[i]);

    FrameworkParts out;
    out.split = split;
    out.forward = Circuit(g.size());
    out.reset = Circuit(g.size());
    out.lambda = Circuit(g.size());
    std::vector<char> used(alpha.size(), 0);
    auto rotate = [&](Circuit& c, int q, std::uint64_t s) {
        if (used[s]) throw DecompositionFailure("phase coefficient applied twice");
        used[s] = 1;
        c.r(q, alpha[s]);
    };

    const auto cover = independent_cover(split.r_t);
    out.cover_length = cover.length();
    std::map<int, GrayCode> codes;
    for (int j : split.gray_plan)
        if (!codes.count(j)) codes.emplace(j, gray_code(split.r_c, j));
    std::vector<char> interior(g.size(), 0);
    if (split.mode == StepMode::Cascade && split.cascade.length() >= 2)
        for (int v : split.cascade.sets[split.cascade.length() - 2]) interior[v] = 1;

    auto flip_step = [&](Circuit& c, std::size_t p, std::vector<std::uint64_t>& cur) {
        const int shared = codes.at(split.gray_plan[0]).flips[p];
        if (split.mode == StepMode::Cascade && !interior[split.control[shared - 1]]) {
            c.append(fanout_cascade(g, split.control[shared - 1], split.cascade));
            for (auto& s : cur) s ^= cbit[shared];
            return;
        }
        if (split.mode == StepMode::Chain) {
            const auto& t = split.target;
            for (int i = split.r_t - 2; i >= 0; --i) emit_cnot(c, g, t[i], t[i + 1]);
            emit_cnot(c, g, split.control[shared - 1], t[0]);
            for (int i = 0; i + 1 < split.r_t; ++i) emit_cnot(c, g, t[i], t[i + 1]);
            for (auto& s : cur) s ^= cbit[shared];
            return;
        }
        for (int i = 0; i < split.r_t; ++i) {
            int h = codes.at(split.gray_plan[i]).flips[p];
            emit_cnot(c, g, split.control[h - 1], split.target[i]);
            cur[i] ^= cbit[h];
        }
    };

    F2Matrix prev = F2Matrix::identity(split.r_t);
    const std::size_t steps = std::size_t{1} << split.r_c;
    for (int k = 0; k < cover.length(); ++k) {
        F2Matrix gk = generator(cover.sets[k], split.r_t);
        F2Matrix change = gk * prev.inverse();
        if (!(change == F2Matrix::identity(split.r_t)))
            out.forward.append(synth_linear_f2_on(g, split.target, change));
        prev = gk;
        std::vector<std::uint64_t> cur(split.r_t);
        for (int i = 0; i < split.r_t; ++i) cur[i] = target_mask(cover.sets[k][i], tbit);
        auto rotate_fresh = [&]() {
            for (int i = 0; i < split.r_t; ++i)
                if (cover.fresh[k][i]) rotate(out.forward, split.target[i], cur[i]);
        };
        rotate_fresh();
        for (std::size_t p = 1; p < steps; ++p) {
            flip_step(out.forward, p, cur);
            rotate_fresh();
        }
        flip_step(out.forward, 0, cur);
    }
    F2Matrix back = prev.inverse();
    if (!(back == F2Matrix::identity(split.r_t))) out.reset.append(synth_linear_f2_on(g, split.target, back));

    std::vector<double> sub(steps, 0.0);
    for (std::size_t cword = 1; cword < steps; ++cword) {
        std::uint64_t s = 0;
        for (int k = 1; k <= split.r_c; ++k)
            if ((cword >> (split.r_c - k)) & 1U) s ^= cbit[k];
        if (used[s]) throw DecompositionFailure("control-only coefficient already applied");
        used[s] = 1;
        sub[cword] = alpha[s];
    }
    for (std::size_t s = 1; s < used.size(); ++s)
        if (!used[s]) throw DecompositionFailure("phase coefficient never applied");
    emit_phase_polynomial(out.lambda, g, split.control, sub, DiagStrategy::Routed);
    return out;
}

void emit_phase_polynomial(Circuit& c, const Graph& g, const std::vector<int>& qubits,
                           const std::vector<double>& alpha, DiagStrategy strategy) {
    const int n = static_cast<int>(qubits.size());
    if (n == 0) return;
    if (n == 1) {
        c.r(qubits[0], alpha[1]);
        return;
    }
    auto parts = build_framework(g, qubits, alpha, plan_split(g, qubits, strategy));
    c.append(parts.forward);
    c.append(parts.reset);
    c.append(parts.lambda);
}

DiagResult synth_diag_noancilla(const Graph& g, const DiagonalSpec& theta, const DiagOptions& opt) {
    if (g.size() != theta.n) throw InvalidParameters("graph size must equal the number of qubits");
    if (theta.theta.size() != (std::size_t{1} << theta.n)) throw InvalidParameters("theta must have 2^n entries");
    DiagStrategy s = resolve_strategy(g, opt.strategy);
    auto alpha = solve_phase_coefficients(theta).alpha;
    std::vector<int> all(g.size());
    std::iota(all.begin(), all.end(), 0);
    DiagResult r;
    r.circuit = Circuit(g.size());
    if (g.size() >= 2) r.split = plan_split(g, all, s);
    emit_phase_polynomial(r.circuit, g, all, alpha, s);
    TargetSpec target = theta;
    r.report = assemble_report(r.circuit, g, opt.simulate ? &target : nullptr, 0, "noancilla/" + strategy_name(s));
    return r;
}

}  // namespace qgsynth
