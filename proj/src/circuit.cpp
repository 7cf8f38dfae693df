// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "qgsynth/errors.hpp"

namespace qgsynth {

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440;
}

Mat2 gate_matrix(const Gate& g) {
    const cplx i1(0.0, 1.0);
    switch (g.kind) {
        case GateKind::R: return {1.0, 0.0, 0.0, std::exp(i1 * g.theta)};
        case GateKind::Rz: return {std::exp(-i1 * (g.theta / 2)), 0.0, 0.0, std::exp(i1 * (g.theta / 2))};
        case GateKind::Ry: {
            double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
            return {c, -s, s, c};
        }
        case GateKind::H: return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
        case GateKind::S: return {1.0, 0.0, 0.0, i1};
        case GateKind::Sdg: return {1.0, 0.0, 0.0, -i1};
        case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
        case GateKind::U2: return g.u;
        default: break;
    }
    return {1.0, 0.0, 0.0, 1.0};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_adjoint(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

Circuit& Circuit::push(const Gate& g) {
    gates.push_back(g);
    return *this;
}

Circuit& Circuit::append(const Circuit& other) {
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

Circuit& Circuit::append_mapped(const Circuit& other, const std::vector<int>& map) {
    for (Gate g : other.gates) {
        g.q0 = map[g.q0];
        if (g.q1 >= 0) g.q1 = map[g.q1];
        gates.push_back(g);
    }
    return *this;
}

Circuit expand_macros(const Circuit& c) {
    Circuit out(c.num_qubits, c.ancilla);
    out.gates.reserve(c.gates.size());
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::Swap) {
            out.swap3(g.q0, g.q1);
        } else {
            out.push(g);
        }
    }
    return out;
}

Metrics metrics(const Circuit& c) {
    Metrics m;
    std::vector<int> busy(std::max(c.num_qubits, 1), 0);
    auto place = [&](int a, int b) {
        int layer = busy[a];
        if (b >= 0) layer = std::max(layer, busy[b]);
        ++layer;
        busy[a] = layer;
        if (b >= 0) busy[b] = layer;
        m.depth = std::max(m.depth, layer);
    };
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::Swap) {
            for (int k = 0; k < 3; ++k) place(g.q0, g.q1);
            m.size += 3;
            m.two_qubit += 3;
            continue;
        }
        place(g.q0, g.two_qubit() ? g.q1 : -1);
        ++m.size;
        if (g.two_qubit()) ++m.two_qubit;
    }
    return m;
}

int cnot_count(const Circuit& c) { return static_cast<int>(metrics(c).two_qubit); }

std::vector<Violation> validate_connectivity(const Circuit& c, const Graph& g) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < c.gates.size(); ++i) {
        const Gate& gt = c.gates[i];
        if (gt.two_qubit() && !g.has_edge(gt.q0, gt.q1)) out.push_back({i, gt.q0, gt.q1});
    }
    return out;
}

LayeredCircuit to_layered_form(const Circuit& raw) {
    Circuit c = expand_macros(raw);
    LayeredCircuit lc;
    lc.num_qubits = c.num_qubits;
    int n = c.num_qubits;
    // cx_layer[q]: index k >= 1 of the most recent CNOT layer touching q (0 if none).
    std::vector<int> cx_layer(n, 0);
    // Pending single-qubit run per qubit, with the CNOT layer it follows.
    std::vector<std::vector<Gate>> pending(n);
    struct Placed {
        int layer;  // 1-based layer index in the alternating form
        Gate g;
    };
    std::vector<Placed> placed;
    auto flush = [&](int q) {
        if (pending[q].empty()) return;
        Gate g;
        if (pending[q].size() == 1) {
            g = pending[q].front();
        } else {
            Mat2 m{1.0, 0.0, 0.0, 1.0};
            for (const Gate& p : pending[q]) m = mat_mul(gate_matrix(p), m);
            g = Gate{GateKind::U2, q, -1, 0.0, m};
        }
        placed.push_back({2 * cx_layer[q] + 1, g});
        pending[q].clear();
    };
    int max_cx = 0;
    for (const Gate& g : c.gates) {
        if (!g.two_qubit()) {
            pending[g.q0].push_back(g);
            continue;
        }
        flush(g.q0);
        flush(g.q1);
        int k = std::max(cx_layer[g.q0], cx_layer[g.q1]) + 1;
        cx_layer[g.q0] = cx_layer[g.q1] = k;
        max_cx = std::max(max_cx, k);
        placed.push_back({2 * k, g});
    }
    for (int q = 0; q < n; ++q) flush(q);
    int total = 0;
    for (const auto& p : placed) total = std::max(total, p.layer);
    lc.layers.resize(total);
    for (int i = 0; i < total; ++i) lc.layers[i].single_qubit = (i % 2 == 0);
    for (const auto& p : placed) lc.layers[p.layer - 1].gates.push_back(p.g);
    return lc;
}

Circuit from_layered_form(const LayeredCircuit& lc) {
    Circuit c(lc.num_qubits);
    for (const auto& layer : lc.layers)
        for (const auto& g : layer.gates) c.push(g);
    return c;
}

Gate gate_inverse(const Gate& g) {
    Gate out = g;
    switch (g.kind) {
        case GateKind::R:
        case GateKind::Rz:
        case GateKind::Ry: out.theta = -g.theta; break;
        case GateKind::S: out.kind = GateKind::Sdg; break;
        case GateKind::Sdg: out.kind = GateKind::S; break;
        case GateKind::U2: out.u = mat_adjoint(g.u); break;
        default: break;
    }
    return out;
}

Circuit compose_inverse(const Circuit& c) {
    Circuit out(c.num_qubits, c.ancilla);
    out.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) out.push(gate_inverse(*it));
    return out;
}

namespace {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::R: return "r";
        case GateKind::Rz: return "rz";
        case GateKind::Ry: return "ry";
        case GateKind::H: return "h";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::X: return "x";
        case GateKind::U2: return "u2";
        case GateKind::CX: return "cx";
        case GateKind::Swap: return "swap";
    }
    return "x";
}

}  // namespace

std::string encode_circuit(const Circuit& c) {
    nlohmann::json j;
    j["n"] = c.num_qubits;
    j["ancilla"] = c.ancilla;
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate& g : c.gates) {
        nlohmann::json e;
        e["g"] = gate_name(g.kind);
        if (g.two_qubit()) {
            e["q"] = {g.q0 + 1, g.q1 + 1};
        } else {
            e["q"] = {g.q0 + 1};
        }
        if (g.kind == GateKind::R || g.kind == GateKind::Rz || g.kind == GateKind::Ry) e["p"] = {g.theta};
        if (g.kind == GateKind::U2) {
            nlohmann::json p = nlohmann::json::array();
            for (const cplx& z : g.u) {
                p.push_back(z.real());
                p.push_back(z.imag());
            }
            e["p"] = p;
        }
        gates.push_back(e);
    }
    j["gates"] = gates;
    return j.dump();
}

Circuit decode_circuit(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    auto need_int = [](const nlohmann::json& obj, const char* key, const std::string& ctx) {
        if (!obj.contains(key) || !obj[key].is_number_integer())
            throw ParseError(ctx + "." + key + ": expected integer");
        return obj[key].get<int>();
    };
    if (!j.is_object()) throw ParseError("circuit: expected object");
    int n = need_int(j, "n", "circuit");
    if (n < 1) throw ParseError("circuit.n: must be positive");
    int anc = j.contains("ancilla") ? need_int(j, "ancilla", "circuit") : 0;
    if (anc < 0 || anc > n) throw ParseError("circuit.ancilla: out of range");
    Circuit c(n, anc);
    if (!j.contains("gates") || !j["gates"].is_array()) throw ParseError("circuit.gates: expected array");
    const auto& gates = j["gates"];
    for (std::size_t i = 0; i < gates.size(); ++i) {
        std::string ctx = "gates[" + std::to_string(i) + "]";
        const auto& e = gates[i];
        if (!e.is_object() || !e.contains("g") || !e["g"].is_string()) throw ParseError(ctx + ".g: expected gate name");
        std::string name = e["g"].get<std::string>();
        static const std::vector<std::pair<std::string, GateKind>> names = {
            {"r", GateKind::R},   {"rz", GateKind::Rz}, {"ry", GateKind::Ry},   {"h", GateKind::H},
            {"s", GateKind::S},   {"sdg", GateKind::Sdg}, {"x", GateKind::X},   {"u2", GateKind::U2},
            {"cx", GateKind::CX}, {"swap", GateKind::Swap}};
        auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == name; });
        if (it == names.end()) throw ParseError(ctx + ".g: unknown gate '" + name + "'");
        Gate g;
        g.kind = it->second;
        int arity = g.two_qubit() ? 2 : 1;
        if (!e.contains("q") || !e["q"].is_array() || static_cast<int>(e["q"].size()) != arity)
            throw ParseError(ctx + ".q: expected " + std::to_string(arity) + " qubit indices");
        std::vector<int> qs;
        for (int k = 0; k < arity; ++k) {
            const auto& qv = e["q"][k];
            if (!qv.is_number_integer()) throw ParseError(ctx + ".q[" + std::to_string(k) + "]: expected integer");
            int q = qv.get<int>();
            if (q < 1 || q > n)
                throw ParseError(ctx + ".q[" + std::to_string(k) + "]: qubit index " + std::to_string(q) +
                                 " outside [1," + std::to_string(n) + "]");
            qs.push_back(q - 1);
        }
        g.q0 = qs[0];
        if (arity == 2) {
            g.q1 = qs[1];
            if (g.q0 == g.q1) throw ParseError(ctx + ".q: two-qubit gate needs distinct qubits");
        }
        int nparams = 0;
        if (g.kind == GateKind::R || g.kind == GateKind::Rz || g.kind == GateKind::Ry) nparams = 1;
        if (g.kind == GateKind::U2) nparams = 8;
        if (nparams > 0) {
            if (!e.contains("p") || !e["p"].is_array() || static_cast<int>(e["p"].size()) != nparams)
                throw ParseError(ctx + ".p: expected " + std::to_string(nparams) + " parameters");
            for (int k = 0; k < nparams; ++k)
                if (!e["p"][k].is_number()) throw ParseError(ctx + ".p[" + std::to_string(k) + "]: expected number");
            if (nparams == 1) {
                g.theta = e["p"][0].get<double>();
            } else {
                for (int k = 0; k < 4; ++k) g.u[k] = cplx(e["p"][2 * k].get<double>(), e["p"][2 * k + 1].get<double>());
            }
        }
        c.push(g);
    }
    return c;
}

}  // namespace qgsynth
