// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/linear_synth.hpp"

#include <algorithm>
#include <numbers>
#include <random>
#include <set>

#include "qgsynth/errors.hpp"

namespace qgsynth {

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m;
    m.n = n;
    m.rows.assign(n, 0);
    for (int i = 0; i < n; ++i) m.rows[i] = std::uint64_t{1} << i;
    return m;
}

void F2Matrix::set(int i, int j, bool v) {
    if (v) {
        rows[i] |= std::uint64_t{1} << j;
    } else {
        rows[i] &= ~(std::uint64_t{1} << j);
    }
}

std::uint64_t F2Matrix::apply(std::uint64_t x) const {
    std::uint64_t y = 0;
    for (int i = 0; i < n; ++i)
        if (__builtin_parityll(rows[i] & x)) y |= std::uint64_t{1} << i;
    return y;
}

F2Matrix F2Matrix::operator*(const F2Matrix& o) const {
    F2Matrix r;
    r.n = n;
    r.rows.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (get(i, k)) r.rows[i] ^= o.rows[k];
    return r;
}

int F2Matrix::rank() const {
    std::vector<std::uint64_t> r = rows;
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int i = rk; i < n; ++i)
            if ((r[i] >> col) & 1U) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(r[rk], r[piv]);
        for (int i = 0; i < n; ++i)
            if (i != rk && ((r[i] >> col) & 1U)) r[i] ^= r[rk];
        ++rk;
    }
    return rk;
}

F2Matrix F2Matrix::inverse() const {
    std::vector<std::uint64_t> a = rows;
    F2Matrix inv = identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int i = col; i < n; ++i)
            if ((a[i] >> col) & 1U) {
                piv = i;
                break;
            }
        if (piv < 0) throw SingularMatrix("matrix is not invertible over F2");
        std::swap(a[col], a[piv]);
        std::swap(inv.rows[col], inv.rows[piv]);
        for (int i = 0; i < n; ++i) {
            if (i != col && ((a[i] >> col) & 1U)) {
                a[i] ^= a[col];
                inv.rows[i] ^= inv.rows[col];
            }
        }
    }
    return inv;
}

F2Matrix random_invertible(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    F2Matrix m;
    m.n = n;
    std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    do {
        m.rows.assign(n, 0);
        for (auto& r : m.rows) r = rng() & mask;
    } while (!m.invertible());
    return m;
}

void emit_cnot(Circuit& c, const Graph& g, int u, int v) {
    if (u == v) throw InvalidParameters("CNOT endpoints must differ");
    if (g.has_edge(u, v)) {
        c.cx(u, v);
        return;
    }
    emit_cnot_along(c, shortest_path(g, u, v));
}

void emit_cnot_along(Circuit& c, const std::vector<int>& p) {
    const int d = static_cast<int>(p.size()) - 1;
    if (d < 1) throw InvalidParameters("CNOT path needs two vertices");
    if (d == 1) {
        c.cx(p[0], p[1]);
        return;
    }
    for (int i = d - 1; i >= 1; --i) c.cx(p[i], p[i + 1]);
    c.cx(p[0], p[1]);
    for (int i = 1; i <= d - 1; ++i) c.cx(p[i], p[i + 1]);
    for (int i = d - 2; i >= 1; --i) c.cx(p[i], p[i + 1]);
    c.cx(p[0], p[1]);
    for (int i = 1; i <= d - 2; ++i) c.cx(p[i], p[i + 1]);
}

Circuit route_cnot(const Graph& g, int u, int v) {
    Circuit c(g.size());
    emit_cnot(c, g, u, v);
    return c;
}

Circuit route_circuit(const Graph& g, const Circuit& in) {
    Circuit c(g.size(), in.ancilla);
    for (const Gate& gt : in.gates) {
        if (gt.kind == GateKind::Swap) {
            emit_cnot(c, g, gt.q0, gt.q1);
            emit_cnot(c, g, gt.q1, gt.q0);
            emit_cnot(c, g, gt.q0, gt.q1);
        } else if (gt.kind == GateKind::CX) {
            emit_cnot(c, g, gt.q0, gt.q1);
        } else {
            c.push(gt);
        }
    }
    return c;
}

Circuit fanout(const Graph& g, int control, const std::vector<int>& targets) {
    Circuit c(g.size());
    if (targets.empty()) return c;
    int prev = control;
    for (int t : targets) {
        if (!g.has_edge(prev, t)) throw NotAPath("control and targets do not form a path");
        prev = t;
    }
    const int n = static_cast<int>(targets.size());
    for (int i = n - 2; i >= 0; --i) c.cx(targets[i], targets[i + 1]);
    c.cx(control, targets[0]);
    for (int i = 0; i + 1 < n; ++i) c.cx(targets[i], targets[i + 1]);
    return c;
}

namespace {

void emit_levels(Circuit& c, const ExpanderCascade& k, int upto, bool reverse) {
    if (!reverse) {
        for (int i = 0; i < upto; ++i)
            for (auto [u, w] : k.matchings[i]) c.cx(u, w);
    } else {
        for (int i = upto - 1; i >= 0; --i)
            for (auto [u, w] : k.matchings[i]) c.cx(u, w);
    }
}

}  // namespace

Circuit fanout_cascade(const Graph& g, int control, const ExpanderCascade& k) {
    Circuit c(g.size());
    const auto& final_set = k.sets.back();
    if (std::find(final_set.begin(), final_set.end(), control) != final_set.end())
        throw InvalidParameters("control must lie outside the cascade");
    const int levels = static_cast<int>(k.matchings.size());
    auto seed_copy = [&]() {
        for (int s : k.sets.front()) emit_cnot(c, g, control, s);
    };
    if (levels == 0) {
        seed_copy();
        return c;
    }
    // F^-1, X, F, G^-1, X, G where F spans every level and G all but the last.
    emit_levels(c, k, levels, true);
    seed_copy();
    emit_levels(c, k, levels, false);
    emit_levels(c, k, levels - 1, true);
    seed_copy();
    emit_levels(c, k, levels - 1, false);
    return c;
}

Circuit synth_linear_f2_on(const Graph& g, const std::vector<int>& qubits, const F2Matrix& M) {
    if (M.n != static_cast<int>(qubits.size())) throw InvalidParameters("matrix size does not match qubit list");
    const int n = M.n;
    std::vector<std::uint64_t> a = M.rows;
    std::vector<std::pair<int, int>> ops;  // (src, dst): row dst ^= row src
    auto row_add = [&](int src, int dst) {
        a[dst] ^= a[src];
        ops.push_back({src, dst});
    };
    for (int col = 0; col < n; ++col) {
        if (!((a[col] >> col) & 1U)) {
            int piv = -1, best = 1 << 30;
            for (int i = col + 1; i < n; ++i) {
                if ((a[i] >> col) & 1U) {
                    int d = distance(g, qubits[i], qubits[col]);
                    if (d < best) {
                        best = d;
                        piv = i;
                    }
                }
            }
            if (piv < 0) throw SingularMatrix("matrix is not invertible over F2");
            row_add(piv, col);
        }
        for (int i = 0; i < n; ++i)
            if (i != col && ((a[i] >> col) & 1U)) row_add(col, i);
    }
    Circuit c(g.size());
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) emit_cnot(c, g, qubits[it->first], qubits[it->second]);
    return c;
}

Circuit synth_linear_f2(const Graph& g, const F2Matrix& M) {
    std::vector<int> q(g.size());
    for (int i = 0; i < g.size(); ++i) q[i] = i;
    return synth_linear_f2_on(g, q, M);
}

Circuit synth_permutation(const Graph& g, const std::vector<int>& perm) {
    const int n = g.size();
    if (static_cast<int>(perm.size()) != n) throw InvalidParameters("permutation size mismatch");
    {
        std::vector<char> seen(n, 0);
        for (int p : perm) {
            if (p < 0 || p >= n || seen[p]) throw InvalidParameters("perm is not a bijection");
            seen[p] = 1;
        }
    }
    if (g.kind() == GraphKind::Path) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        return synth_permutation_on_path(g, order, perm);
    }
    auto order = bfs_order(g);
    std::vector<int> parent(n, -1), depth(n, 0);
    {
        std::vector<char> seen(n, 0);
        seen[order[0]] = 1;
        for (int v : order)
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                }
    }
    // token_at[pos] = original qubit whose content sits at pos.
    std::vector<int> token_at(n), pos_of(n);
    for (int i = 0; i < n; ++i) token_at[i] = pos_of[i] = i;
    std::vector<int> inv(n);
    for (int i = 0; i < n; ++i) inv[perm[i]] = i;
    Circuit c(n);
    for (int k = n - 1; k >= 1; --k) {
        int leaf = order[k];
        int tok = inv[leaf];
        int at = pos_of[tok];
        // tree path at -> leaf
        std::vector<int> up, down;
        int a = at, b = leaf;
        while (depth[a] > depth[b]) { up.push_back(a); a = parent[a]; }
        while (depth[b] > depth[a]) { down.push_back(b); b = parent[b]; }
        while (a != b) {
            up.push_back(a);
            down.push_back(b);
            a = parent[a];
            b = parent[b];
        }
        up.push_back(a);
        std::vector<int> path = up;
        for (auto it = down.rbegin(); it != down.rend(); ++it) path.push_back(*it);
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            int p = path[i], q = path[i + 1];
            c.swap3(p, q);
            std::swap(token_at[p], token_at[q]);
            pos_of[token_at[p]] = p;
            pos_of[token_at[q]] = q;
        }
    }
    return c;
}

Circuit synth_permutation_on_path(const Graph& g, const std::vector<int>& order, const std::vector<int>& perm) {
    const int L = static_cast<int>(order.size());
    std::vector<int> index_of(g.size(), -1);
    for (int i = 0; i < L; ++i) index_of[order[i]] = i;
    // dest[j] = path index where the content now at path index j must end.
    std::vector<int> dest(L);
    for (int j = 0; j < L; ++j) {
        int d = index_of[perm[order[j]]];
        if (d < 0) throw InvalidParameters("permutation leaves the path");
        dest[j] = d;
    }
    Circuit c(g.size());
    for (int round = 0; round < L; ++round) {
        for (int j = round % 2; j + 1 < L; j += 2) {
            if (dest[j] > dest[j + 1]) {
                if (!g.has_edge(order[j], order[j + 1])) throw NotAPath("vertex order is not a path");
                c.swap3(order[j], order[j + 1]);
                std::swap(dest[j], dest[j + 1]);
            }
        }
    }
    return c;
}

namespace {

void check_disjoint(const std::vector<int>& source, const std::vector<std::vector<int>>& sinks) {
    std::set<int> seen(source.begin(), source.end());
    if (seen.size() != source.size()) throw OverlappingRegisters("source repeats a qubit");
    for (const auto& s : sinks) {
        if (s.size() != source.size()) throw InvalidParameters("sink size differs from source size");
        for (int q : s)
            if (!seen.insert(q).second) throw OverlappingRegisters("qubit " + std::to_string(q + 1) + " reused");
    }
}

}  // namespace

std::vector<std::vector<Gate>> copy_pipeline_schedule(const std::vector<int>& source,
                                                     const std::vector<std::vector<int>>& sinks) {
    check_disjoint(source, sinks);
    const int n = static_cast<int>(source.size());
    const int t = static_cast<int>(sinks.size());
    std::vector<std::vector<Gate>> layers;
    if (t == 0 || n == 0) return layers;
    auto reg = [&](int k) -> const std::vector<int>& { return k == 0 ? source : sinks[k - 1]; };
    // Layer L holds CNOT(copy c-1 bit i -> copy c bit i) for L = c + (n - i), bits 1-based.
    for (int L = 1; L <= n + t - 1; ++L) {
        auto& layer = layers.emplace_back();
        for (int cc = 1; cc <= t; ++cc) {
            int i = cc + n - L;
            if (i < 1 || i > n) continue;
            layer.push_back({GateKind::CX, reg(cc - 1)[i - 1], reg(cc)[i - 1], 0.0, {}});
        }
    }
    return layers;
}

Circuit copy_register_logical(int num_qubits, const std::vector<int>& source,
                              const std::vector<std::vector<int>>& sinks, CopyTopology topology, const Graph* g) {
    check_disjoint(source, sinks);
    Circuit c(num_qubits);
    const int n = static_cast<int>(source.size());
    const int t = static_cast<int>(sinks.size());
    if (t == 0 || n == 0) return c;
    if (topology == CopyTopology::Path) {
        for (const auto& layer : copy_pipeline_schedule(source, sinks))
            for (const auto& g2 : layer) c.push(g2);
        return c;
    }
    // Recursive doubling: every filled register feeds one empty sink per round.
    std::vector<const std::vector<int>*> filled{&source};
    std::vector<char> done(t, 0);
    int remaining = t;
    while (remaining > 0) {
        std::vector<std::pair<const std::vector<int>*, int>> round;
        std::vector<char> claimed(t, 0);
        for (const auto* f : filled) {
            int best = -1, bestd = 1 << 30;
            for (int k = 0; k < t; ++k) {
                if (done[k] || claimed[k]) continue;
                int d = g ? distance(*g, (*f)[0], sinks[k][0]) : k;
                if (d < bestd) {
                    bestd = d;
                    best = k;
                }
            }
            if (best < 0) break;
            claimed[best] = 1;
            round.push_back({f, best});
        }
        for (auto [f, k] : round) {
            for (int i = 0; i < n; ++i) c.cx((*f)[i], sinks[k][i]);
            done[k] = 1;
            --remaining;
        }
        for (auto [f, k] : round) filled.push_back(&sinks[k]);
    }
    return c;
}

Circuit copy_register(const Graph& g, const std::vector<int>& source, const std::vector<std::vector<int>>& sinks,
                      CopyTopology topology) {
    return route_circuit(g, copy_register_logical(g.size(), source, sinks, topology, &g));
}

void emit_toffoli(Circuit& c, const Graph& g, int a, int b, int t) {
    const double q = std::numbers::pi / 4;
    c.h(t);
    emit_cnot(c, g, b, t);
    c.r(t, -q);
    emit_cnot(c, g, a, t);
    c.r(t, q);
    emit_cnot(c, g, b, t);
    c.r(t, -q);
    emit_cnot(c, g, a, t);
    c.r(b, q);
    c.r(t, q);
    c.h(t);
    emit_cnot(c, g, a, b);
    c.r(a, q);
    c.r(b, -q);
    emit_cnot(c, g, a, b);
}

Circuit multi_controlled_x(const Graph& g, const std::vector<int>& controls, const std::string& pattern, int target,
                           const std::vector<int>& scratch) {
    const int k = static_cast<int>(controls.size());
    if (static_cast<int>(pattern.size()) != k) throw InvalidParameters("pattern length must match control count");
    if (k > 2 && static_cast<int>(scratch.size()) < k - 2)
        throw InsufficientScratch("need " + std::to_string(k - 2) + " clean scratch qubits");
    Circuit c(g.size());
    for (int i = 0; i < k; ++i)
        if (pattern[i] == '0') c.x(controls[i]);
    if (k == 0) {
        c.x(target);
    } else if (k == 1) {
        emit_cnot(c, g, controls[0], target);
    } else if (k == 2) {
        emit_toffoli(c, g, controls[0], controls[1], target);
    } else {
        std::vector<std::array<int, 3>> ladder;
        ladder.push_back({controls[0], controls[1], scratch[0]});
        for (int i = 2; i < k - 1; ++i) ladder.push_back({controls[i], scratch[i - 2], scratch[i - 1]});
        for (const auto& s : ladder) emit_toffoli(c, g, s[0], s[1], s[2]);
        emit_toffoli(c, g, controls[k - 1], scratch[k - 3], target);
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) emit_toffoli(c, g, (*it)[0], (*it)[1], (*it)[2]);
    }
    for (int i = 0; i < k; ++i)
        if (pattern[i] == '0') c.x(controls[i]);
    return c;
}

}  // namespace qgsynth
