// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <cmath>

#include "json.hpp"
#include "qgsynth/errors.hpp"
#include "qgsynth/sim.hpp"

namespace qgsynth {

UnitarySpec ucg_matrix(const UcgSpec& v) {
    UnitarySpec u;
    u.n = v.n;
    std::size_t dim = std::size_t{1} << v.n;
    u.m.assign(dim * dim, 0.0);
    int t = v.target_qubit();
    std::uint64_t tb = std::uint64_t{1} << (v.n - 1 - t);
    for (std::size_t col = 0; col < dim; ++col) {
        // Branch index: remaining bits in qubit order.
        std::uint64_t hi = (col >> (v.n - t)) << (v.n - 1 - t);
        std::uint64_t lo = col & (tb - 1);
        std::uint64_t b = hi | lo;
        int in_bit = (col & tb) ? 1 : 0;
        const Mat2& m = v.branches[b];
        std::size_t r0 = col & ~tb, r1 = col | tb;
        u.m[r0 * dim + col] = m[0 * 2 + in_bit];
        u.m[r1 * dim + col] = m[1 * 2 + in_bit];
    }
    return u;
}

bool is_unitary(const Mat2& u, double tol) {
    Mat2 p = mat_mul(mat_adjoint(u), u);
    return std::abs(p[0] - 1.0) <= tol && std::abs(p[3] - 1.0) <= tol && std::abs(p[1]) <= tol &&
           std::abs(p[2]) <= tol;
}

bool is_unitary(const UnitarySpec& u, double tol) {
    std::size_t dim = std::size_t{1} << u.n;
    if (u.m.size() != dim * dim) return false;
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            cplx s = 0.0;
            for (std::size_t r = 0; r < dim; ++r) s += std::conj(u.m[r * dim + a]) * u.m[r * dim + b];
            if (std::abs(s - (a == b ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

namespace {

using AmpMap = std::unordered_map<std::uint64_t, cplx>;

AmpMap run_basis(const Circuit& c, std::uint64_t x) {
    AmpMap out;
    if (is_monomial(c) && c.num_qubits <= kF2Cap) {
        auto r = simulate_monomial(c, x);
        out[r.index] = r.phase;
        return out;
    }
    if (c.num_qubits <= 14) {
        auto psi = simulate_basis(c, x);
        for (std::size_t i = 0; i < psi.size(); ++i)
            if (std::norm(psi[i]) > 0.0) out[i] = psi[i];
        return out;
    }
    try {
        return simulate_sparse(c, x).amp;
    } catch (const TooLarge&) {
        if (c.num_qubits > kDenseStateCap) throw;
    }
    auto psi = simulate_basis(c, x);
    for (std::size_t i = 0; i < psi.size(); ++i)
        if (std::norm(psi[i]) > 0.0) out[i] = psi[i];
    return out;
}

cplx lookup(const AmpMap& a, std::uint64_t k) {
    auto it = a.find(k);
    return it == a.end() ? cplx(0.0) : it->second;
}

double ancilla_mass(const AmpMap& a, int m) {
    std::uint64_t mask = (std::uint64_t{1} << m) - 1;
    double s = 0.0;
    for (auto [k, v] : a)
        if (k & mask) s += std::norm(v);
    return s;
}

std::size_t argmax_abs(const std::vector<cplx>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[best]) + 1e-12) best = i;
    return best;
}

}  // namespace

VerifyResult verify_target(const Circuit& c, const TargetSpec& target, int m) {
    VerifyResult r;
    const int n = c.num_qubits - m;
    if (n < 0) throw InvalidParameters("ancilla count exceeds circuit width");
    if (c.num_qubits > kF2Cap) throw TooLarge("verification limited to 64 qubits");
    const std::size_t dim = std::size_t{1} << n;
    auto note_leak = [&](const AmpMap& a) {
        r.ancilla_leak = std::max(r.ancilla_leak, ancilla_mass(a, m));
    };
    if (const auto* d = std::get_if<DiagonalSpec>(&target)) {
        if (d->n != n) throw InvalidParameters("diagonal size does not match the data register");
        std::vector<cplx> got(dim);
        for (std::size_t x = 0; x < dim; ++x) {
            auto a = run_basis(c, static_cast<std::uint64_t>(x) << m);
            note_leak(a);
            got[x] = lookup(a, static_cast<std::uint64_t>(x) << m);
        }
        std::size_t e = argmax_abs(got);
        cplx align = std::polar(1.0, std::arg(got[e]) - d->theta[e]);
        for (std::size_t x = 0; x < dim; ++x)
            r.residual = std::max(r.residual, std::abs(got[x] / align - std::polar(1.0, d->theta[x])));
    } else if (const auto* s = std::get_if<StateSpec>(&target)) {
        if (s->n != n) throw InvalidParameters("state size does not match the data register");
        auto a = run_basis(c, 0);
        note_leak(a);
        cplx ov = 0.0;
        for (std::size_t x = 0; x < dim; ++x) ov += std::conj(s->amp[x]) * lookup(a, static_cast<std::uint64_t>(x) << m);
        r.residual = std::max(0.0, 1.0 - std::norm(ov));
    } else {
        UnitarySpec u = std::holds_alternative<UcgSpec>(target) ? ucg_matrix(std::get<UcgSpec>(target))
                                                                 : std::get<UnitarySpec>(target);
        if (u.n != n) throw InvalidParameters("unitary size does not match the data register");
        std::vector<cplx> got(dim * dim);
        for (std::size_t x = 0; x < dim; ++x) {
            auto a = run_basis(c, static_cast<std::uint64_t>(x) << m);
            note_leak(a);
            for (std::size_t y = 0; y < dim; ++y) got[y * dim + x] = lookup(a, static_cast<std::uint64_t>(y) << m);
        }
        std::size_t e = argmax_abs(u.m);
        cplx align = std::polar(1.0, std::arg(got[e]) - std::arg(u.m[e]));
        for (std::size_t x = 0; x < dim; ++x) {
            double col = 0.0;
            for (std::size_t y = 0; y < dim; ++y) col += std::norm(got[y * dim + x] / align - u.m[y * dim + x]);
            r.residual = std::max(r.residual, std::sqrt(col));
        }
    }
    r.ancilla_restored = r.ancilla_leak <= 1e-10;
    return r;
}

SynthesisReport assemble_report(const Circuit& c, const Graph& g, const TargetSpec* target, int m,
                                const std::string& backend) {
    SynthesisReport rep;
    rep.metrics = metrics(c);
    rep.backend = backend;
    if (g.size() == c.num_qubits) {
        rep.violations = validate_connectivity(c, g);
    } else {
        rep.notes.push_back("graph size differs from circuit width");
    }
    if (target) {
        try {
            auto v = verify_target(c, *target, m);
            rep.residual = v.residual;
            rep.ancilla_restored = v.ancilla_restored;
        } catch (const TooLarge&) {
            rep.notes.push_back("not simulated");
        }
    }
    return rep;
}

std::string encode_report(const SynthesisReport& r) {
    nlohmann::json j;
    j["depth"] = r.metrics.depth;
    j["size"] = r.metrics.size;
    j["two_qubit"] = r.metrics.two_qubit;
    nlohmann::json v = nlohmann::json::array();
    for (const auto& x : r.violations) v.push_back({x.u + 1, x.v + 1});
    j["violations"] = v;
    if (r.residual) {
        j["residual"] = *r.residual;
    } else {
        j["residual"] = "not simulated";
    }
    j["ancilla_restored"] = r.ancilla_restored;
    j["backend"] = r.backend;
    j["notes"] = r.notes;
    return j.dump(2);
}

}  // namespace qgsynth
