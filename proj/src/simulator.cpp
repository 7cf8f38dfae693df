// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <algorithm>
#include <cmath>

#include "qgsynth/errors.hpp"
#include "qgsynth/sim.hpp"

namespace qgsynth {

namespace {

constexpr std::int64_t kParallelThreshold = std::int64_t{1} << 14;

void kernel_1q_serial(StateVector& psi, std::uint64_t bit, const Mat2& m) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::uint64_t low = bit - 1;
    for (std::int64_t k = 0; k < half; ++k) {
        std::uint64_t i0 = ((static_cast<std::uint64_t>(k) & ~low) << 1) | (static_cast<std::uint64_t>(k) & low);
        std::uint64_t i1 = i0 | bit;
        cplx a = psi[i0], b = psi[i1];
        psi[i0] = m[0] * a + m[1] * b;
        psi[i1] = m[2] * a + m[3] * b;
    }
}

void kernel_1q_parallel(StateVector& psi, std::uint64_t bit, const Mat2& m) {
    const std::int64_t half = static_cast<std::int64_t>(psi.size() / 2);
    const std::uint64_t low = bit - 1;
#pragma omp parallel for schedule(static) if (half >= kParallelThreshold)
    for (std::int64_t k = 0; k < half; ++k) {
        std::uint64_t i0 = ((static_cast<std::uint64_t>(k) & ~low) << 1) | (static_cast<std::uint64_t>(k) & low);
        std::uint64_t i1 = i0 | bit;
        cplx a = psi[i0], b = psi[i1];
        psi[i0] = m[0] * a + m[1] * b;
        psi[i1] = m[2] * a + m[3] * b;
    }
}

void kernel_cx_serial(StateVector& psi, std::uint64_t cbit, std::uint64_t tbit) {
    const std::int64_t dim = static_cast<std::int64_t>(psi.size());
    for (std::int64_t i = 0; i < dim; ++i) {
        std::uint64_t u = static_cast<std::uint64_t>(i);
        if ((u & cbit) && !(u & tbit)) std::swap(psi[u], psi[u | tbit]);
    }
}

void kernel_cx_parallel(StateVector& psi, std::uint64_t cbit, std::uint64_t tbit) {
    const std::int64_t dim = static_cast<std::int64_t>(psi.size());
#pragma omp parallel for schedule(static) if (dim >= kParallelThreshold)
    for (std::int64_t i = 0; i < dim; ++i) {
        std::uint64_t u = static_cast<std::uint64_t>(i);
        if ((u & cbit) && !(u & tbit)) std::swap(psi[u], psi[u | tbit]);
    }
}

void check_gate(int num_qubits, const Gate& g) {
    if (g.q0 < 0 || g.q0 >= num_qubits || (g.two_qubit() && (g.q1 < 0 || g.q1 >= num_qubits || g.q1 == g.q0)))
        throw InvalidParameters("gate qubit index out of range");
}

}  // namespace

void apply_gate(StateVector& psi, int num_qubits, const Gate& g, KernelMode mode) {
    check_gate(num_qubits, g);
    if (g.kind == GateKind::Swap) {
        Gate a{GateKind::CX, g.q0, g.q1, 0.0, {}}, b{GateKind::CX, g.q1, g.q0, 0.0, {}};
        apply_gate(psi, num_qubits, a, mode);
        apply_gate(psi, num_qubits, b, mode);
        apply_gate(psi, num_qubits, a, mode);
        return;
    }
    if (g.kind == GateKind::CX) {
        auto cb = qubit_bit(num_qubits, g.q0), tb = qubit_bit(num_qubits, g.q1);
        if (mode == KernelMode::Parallel) {
            kernel_cx_parallel(psi, cb, tb);
        } else {
            kernel_cx_serial(psi, cb, tb);
        }
        return;
    }
    Mat2 m = gate_matrix(g);
    if (mode == KernelMode::Parallel) {
        kernel_1q_parallel(psi, qubit_bit(num_qubits, g.q0), m);
    } else {
        kernel_1q_serial(psi, qubit_bit(num_qubits, g.q0), m);
    }
}

void apply_circuit(StateVector& psi, const Circuit& c, KernelMode mode) {
    for (const Gate& g : c.gates) apply_gate(psi, c.num_qubits, g, mode);
}

StateVector simulate_basis(const Circuit& c, std::uint64_t x, KernelMode mode) {
    if (c.num_qubits > kDenseStateCap)
        throw TooLarge("dense simulation limited to " + std::to_string(kDenseStateCap) + " qubits");
    StateVector psi(std::size_t{1} << c.num_qubits, 0.0);
    psi[x] = 1.0;
    apply_circuit(psi, c, mode);
    return psi;
}

StateVector simulate_state(const Circuit& c, KernelMode mode) { return simulate_basis(c, 0, mode); }

std::vector<cplx> simulate_unitary(const Circuit& c) {
    if (c.num_qubits > kDenseUnitaryCap)
        throw TooLarge("unitary simulation limited to " + std::to_string(kDenseUnitaryCap) + " qubits");
    std::size_t dim = std::size_t{1} << c.num_qubits;
    std::vector<cplx> u(dim * dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto psi = simulate_basis(c, col, KernelMode::Serial);
        for (std::size_t r = 0; r < dim; ++r) u[r * dim + col] = psi[r];
    }
    return u;
}

void apply_gate_sparse(SparseState& s, const Gate& g) {
    check_gate(s.num_qubits, g);
    const int nq = s.num_qubits;
    if (g.kind == GateKind::CX || g.kind == GateKind::Swap || g.kind == GateKind::X) {
        std::unordered_map<std::uint64_t, cplx> next;
        next.reserve(s.amp.size());
        for (auto [k, a] : s.amp) {
            std::uint64_t v = k;
            if (g.kind == GateKind::X) {
                v ^= qubit_bit(nq, g.q0);
            } else if (g.kind == GateKind::CX) {
                if (v & qubit_bit(nq, g.q0)) v ^= qubit_bit(nq, g.q1);
            } else {
                bool a0 = v & qubit_bit(nq, g.q0), a1 = v & qubit_bit(nq, g.q1);
                if (a0 != a1) v ^= qubit_bit(nq, g.q0) | qubit_bit(nq, g.q1);
            }
            next.emplace(v, a);
        }
        s.amp.swap(next);
        return;
    }
    Mat2 m = gate_matrix(g);
    std::uint64_t bit = qubit_bit(nq, g.q0);
    if (std::abs(m[1]) == 0.0 && std::abs(m[2]) == 0.0) {
        for (auto& [k, a] : s.amp) a *= (k & bit) ? m[3] : m[0];
        return;
    }
    std::unordered_map<std::uint64_t, cplx> next;
    next.reserve(s.amp.size() * 2);
    for (auto [k, a] : s.amp) {
        std::uint64_t k0 = k & ~bit, k1 = k | bit;
        if (k & bit) {
            next[k0] += m[1] * a;
            next[k1] += m[3] * a;
        } else {
            next[k0] += m[0] * a;
            next[k1] += m[2] * a;
        }
    }
    for (auto it = next.begin(); it != next.end();) {
        if (std::norm(it->second) < 1e-30) {
            it = next.erase(it);
        } else {
            ++it;
        }
    }
    s.amp.swap(next);
}

SparseState simulate_sparse(const Circuit& c, std::uint64_t x, std::size_t max_support) {
    if (c.num_qubits > kF2Cap) throw TooLarge("sparse simulation limited to 64 qubits");
    SparseState s;
    s.num_qubits = c.num_qubits;
    s.amp[x] = 1.0;
    for (const Gate& g : c.gates) {
        apply_gate_sparse(s, g);
        if (s.amp.size() > max_support) throw TooLarge("sparse support exceeded the limit");
    }
    return s;
}

bool is_monomial(const Circuit& c) {
    return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
        switch (g.kind) {
            case GateKind::H:
            case GateKind::Ry: return false;
            case GateKind::U2:
                return (std::abs(g.u[1]) == 0.0 && std::abs(g.u[2]) == 0.0) ||
                       (std::abs(g.u[0]) == 0.0 && std::abs(g.u[3]) == 0.0);
            default: return true;
        }
    });
}

MonomialResult simulate_monomial(const Circuit& c, std::uint64_t x) {
    if (c.num_qubits > kF2Cap) throw TooLarge("monomial simulation limited to 64 qubits");
    MonomialResult r;
    r.index = x;
    const int nq = c.num_qubits;
    for (const Gate& g : c.gates) {
        std::uint64_t b0 = qubit_bit(nq, g.q0);
        switch (g.kind) {
            case GateKind::CX:
                if (r.index & b0) r.index ^= qubit_bit(nq, g.q1);
                break;
            case GateKind::Swap: {
                std::uint64_t b1 = qubit_bit(nq, g.q1);
                if (((r.index & b0) != 0) != ((r.index & b1) != 0)) r.index ^= b0 | b1;
                break;
            }
            case GateKind::X: r.index ^= b0; break;
            default: {
                Mat2 m = gate_matrix(g);
                bool one = r.index & b0;
                if (std::abs(m[1]) == 0.0 && std::abs(m[2]) == 0.0) {
                    r.phase *= one ? m[3] : m[0];
                } else {
                    r.phase *= one ? m[1] : m[2];
                    r.index ^= b0;
                }
            }
        }
    }
    return r;
}

bool is_f2(const Circuit& c) {
    return std::all_of(c.gates.begin(), c.gates.end(), [](const Gate& g) {
        return g.kind == GateKind::CX || g.kind == GateKind::Swap || g.kind == GateKind::X;
    });
}

std::uint64_t f2_apply(const Circuit& c, std::uint64_t x) {
    if (!is_f2(c)) throw InvalidParameters("f2_apply needs an X/CNOT/SWAP circuit");
    return simulate_monomial(c, x).index;
}

}  // namespace qgsynth
