// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/state_unitary.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "qgsynth/diag_ancilla.hpp"
#include "qgsynth/errors.hpp"

namespace qgsynth {

namespace {

struct Zyz {
    double phase = 0.0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

// U = e^{i phase} Rz(a) Ry(b) Rz(c).
Zyz zyz(const Mat2& u) {
    Zyz z;
    cplx det = u[0] * u[3] - u[1] * u[2];
    z.phase = std::arg(det) / 2.0;
    cplx ph = std::polar(1.0, -z.phase);
    cplx v00 = u[0] * ph, v10 = u[2] * ph;
    z.b = 2.0 * std::atan2(std::abs(v10), std::abs(v00));
    double sum = std::abs(v00) > 1e-14 ? -2.0 * std::arg(v00) : 0.0;  // a + c
    double diff = std::abs(v10) > 1e-14 ? 2.0 * std::arg(v10) : 0.0;  // a - c
    z.a = (sum + diff) / 2.0;
    z.c = (sum - diff) / 2.0;
    return z;
}

std::uint64_t branch_of(std::uint64_t x, int n, int t) {
    std::uint64_t tb = std::uint64_t{1} << (n - 1 - t);
    std::uint64_t hi = (x >> (n - t)) << (n - 1 - t);
    return hi | (x & (tb - 1));
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(std::max(0, hi - lo));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::string join_unique(const std::vector<std::string>& v) {
    std::set<std::string> seen;
    std::string out;
    for (const auto& s : v) {
        if (!seen.insert(s).second) continue;
        if (!out.empty()) out += ",";
        out += s;
    }
    return out;
}

}  // namespace

UcgDiagonals ucg_to_diagonals(const UcgSpec& v) {
    const int n = v.n;
    const int t = v.target_qubit();
    if (v.branches.size() != (std::size_t{1} << (n - 1))) throw InvalidParameters("UCG needs 2^(n-1) branches");
    const std::size_t dim = std::size_t{1} << n;
    const std::uint64_t tb = std::uint64_t{1} << (n - 1 - t);
    std::vector<Zyz> eul;
    for (const auto& b : v.branches) {
        if (!is_unitary(b, 1e-9)) throw DecompositionFailure("UCG branch is not unitary");
        eul.push_back(zyz(b));
    }
    std::vector<double> t1(dim), t2(dim), t3(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        const Zyz& z = eul[branch_of(x, n, t)];
        const double sgn = (x & tb) ? 0.5 : -0.5;
        t1[x] = sgn * z.c;
        t2[x] = sgn * z.b;
        t3[x] = z.phase + sgn * z.a;
    }
    UcgDiagonals d;
    d.target = t;
    d.d1 = normalize_diagonal(n, t1);
    d.d2 = normalize_diagonal(n, t2);
    d.d3 = normalize_diagonal(n, t3);
    return d;
}

UnitarySpec ucg_from_diagonals(const UcgDiagonals& d) {
    const int n = d.d1.n;
    Circuit c(n);
    const DiagonalSpec* ds[3] = {&d.d1, &d.d2, &d.d3};
    UnitarySpec u;
    u.n = n;
    const std::size_t dim = std::size_t{1} << n;
    u.m.assign(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) u.m[i * dim + i] = 1.0;
    auto apply_diag = [&](const DiagonalSpec& s) {
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t col = 0; col < dim; ++col) u.m[r * dim + col] *= std::polar(1.0, s.theta[r]);
    };
    auto apply_1q = [&](const Mat2& g) {
        const std::uint64_t tb = std::uint64_t{1} << (n - 1 - d.target);
        for (std::size_t col = 0; col < dim; ++col) {
            for (std::size_t r = 0; r < dim; ++r) {
                if (r & tb) continue;
                cplx a = u.m[r * dim + col], b = u.m[(r | tb) * dim + col];
                u.m[r * dim + col] = g[0] * a + g[1] * b;
                u.m[(r | tb) * dim + col] = g[2] * a + g[3] * b;
            }
        }
    };
    auto gm = [](GateKind k) { return gate_matrix(Gate{k, 0, -1, 0.0, {}}); };
    apply_diag(*ds[0]);
    apply_1q(gm(GateKind::Sdg));
    apply_1q(gm(GateKind::H));
    apply_diag(*ds[1]);
    apply_1q(gm(GateKind::H));
    apply_1q(gm(GateKind::S));
    apply_diag(*ds[2]);
    return u;
}

void emit_ucg(Circuit& c, const Graph& g, const std::vector<int>& data, const UcgSpec& v,
              const std::vector<int>& ancilla, std::vector<std::string>* backends) {
    if (static_cast<int>(data.size()) != v.n) throw InvalidParameters("data register size must match the UCG");
    const int t = data[v.target_qubit()];
    if (v.n == 1) {
        c.u2(t, v.branches[0]);
        return;
    }
    auto d = ucg_to_diagonals(v);
    auto diag = [&](const DiagonalSpec& s) {
        auto b = emit_diagonal(c, g, data, solve_phase_coefficients(s).alpha, ancilla);
        if (backends) backends->push_back(b);
    };
    diag(d.d1);
    c.sdg(t);
    c.h(t);
    diag(d.d2);
    c.h(t);
    c.s(t);
    diag(d.d3);
}

Circuit synth_ucg(const Graph& g, const UcgSpec& v, int m) {
    if (g.size() != v.n + m) throw InvalidParameters("graph must have n+m vertices");
    Circuit c(g.size(), m);
    emit_ucg(c, g, range(0, v.n), v, range(v.n, v.n + m));
    return c;
}

std::vector<UcgSpec> state_to_ucgs(const StateSpec& v) {
    const int n = v.n;
    const std::size_t dim = std::size_t{1} << n;
    if (v.amp.size() != dim) throw InvalidParameters("state needs 2^n amplitudes");
    double norm = 0.0;
    for (auto a : v.amp) norm += std::norm(a);
    if (std::abs(norm - 1.0) > 1e-9) throw InvalidParameters("state must have unit norm");
    // prob[j][y]: mass of strings with j-bit prefix y.
    std::vector<std::vector<double>> prob(n + 1);
    prob[n].resize(dim);
    for (std::size_t x = 0; x < dim; ++x) prob[n][x] = std::norm(v.amp[x]);
    for (int j = n - 1; j >= 0; --j) {
        prob[j].resize(std::size_t{1} << j);
        for (std::size_t y = 0; y < prob[j].size(); ++y) prob[j][y] = prob[j + 1][2 * y] + prob[j + 1][2 * y + 1];
    }
    std::vector<UcgSpec> out;
    for (int j = 1; j <= n; ++j) {
        UcgSpec u;
        u.n = j;
        u.target = j - 1;
        const std::size_t nb = std::size_t{1} << (j - 1);
        for (std::size_t b = 0; b < nb; ++b) {
            const double pb = prob[j - 1][b];
            if (pb <= 1e-300) {
                u.branches.push_back({1.0, 0.0, 0.0, 1.0});
                continue;
            }
            const double r = std::sqrt(pb);
            cplx c0, c1;
            if (j < n) {
                c0 = std::sqrt(prob[j][2 * b]) / r;
                c1 = std::sqrt(prob[j][2 * b + 1]) / r;
            } else {
                c0 = v.amp[2 * b] / r;
                c1 = v.amp[2 * b + 1] / r;
            }
            double s = std::sqrt(std::norm(c0) + std::norm(c1));
            c0 /= s;
            c1 /= s;
            u.branches.push_back({c0, -std::conj(c1), c1, std::conj(c0)});
        }
        out.push_back(u);
    }
    return out;
}

SynthOutput qsp_synthesize(const Graph& g, const StateSpec& v, int m, bool simulate) {
    const int n = v.n;
    if (g.size() != n + m) throw InvalidParameters("graph must have n+m vertices");
    SynthOutput out;
    out.circuit = Circuit(g.size(), m);
    std::vector<std::string> backends;
    const auto anc = range(n, n + m);
    for (const auto& u : state_to_ucgs(v)) emit_ucg(out.circuit, g, range(0, u.n), u, anc, &backends);
    TargetSpec target = v;
    out.report = assemble_report(out.circuit, g, simulate ? &target : nullptr, m, join_unique(backends));
    return out;
}

namespace {

using Eigen::MatrixXcd;

Mat2 to_mat2(const MatrixXcd& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

MatrixXcd nearest_unitary(const MatrixXcd& m) {
    Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().adjoint();
}

std::vector<UcgSpec> demultiplex(const MatrixXcd& u, int k);

std::vector<UcgSpec> multiplexed(const MatrixXcd& b0, const MatrixXcd& b1, int k) {
    auto l0 = demultiplex(b0, k - 1);
    auto l1 = demultiplex(b1, k - 1);
    std::vector<UcgSpec> out;
    for (std::size_t i = 0; i < l0.size(); ++i) {
        UcgSpec s;
        s.n = k;
        s.target = l0[i].target_qubit() + 1;
        s.branches = l0[i].branches;
        s.branches.insert(s.branches.end(), l1[i].branches.begin(), l1[i].branches.end());
        out.push_back(s);
    }
    return out;
}

std::vector<UcgSpec> demultiplex(const MatrixXcd& u, int k) {
    if (k == 1) {
        UcgSpec s;
        s.n = 1;
        s.target = 0;
        s.branches = {to_mat2(nearest_unitary(u))};
        return {s};
    }
    const int h = 1 << (k - 1);
    MatrixXcd u00 = u.topLeftCorner(h, h), u01 = u.topRightCorner(h, h);
    MatrixXcd u10 = u.bottomLeftCorner(h, h), u11 = u.bottomRightCorner(h, h);
    Eigen::JacobiSVD<MatrixXcd> svd(u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
    MatrixXcd a1 = svd.matrixU();
    MatrixXcd b1 = svd.matrixV().adjoint();
    Eigen::VectorXd cv = svd.singularValues();
    MatrixXcd m10 = u10 * svd.matrixV();
    MatrixXcd a2 = MatrixXcd::Zero(h, h);
    Eigen::VectorXd sv(h), theta(h);
    for (int i = h - 1; i >= 0; --i) {
        Eigen::VectorXcd col = m10.col(i);
        for (int j = h - 1; j > i; --j) col -= a2.col(j) * a2.col(j).dot(col);
        double nrm = col.norm();
        if (nrm < 1e-10) {
            int best = 0;
            double overlap = 1e300;
            for (int e = 0; e < h; ++e) {
                double o = 0.0;
                for (int j = h - 1; j > i; --j) o += std::norm(a2(e, j));
                if (o < overlap) {
                    overlap = o;
                    best = e;
                }
            }
            col = Eigen::VectorXcd::Zero(h);
            col(best) = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (int j = h - 1; j > i; --j) col -= a2.col(j) * a2.col(j).dot(col);
            nrm = col.norm();
        }
        a2.col(i) = col / nrm;
        sv(i) = std::max(0.0, a2.col(i).dot(m10.col(i)).real());
        theta(i) = std::atan2(sv(i), cv(i));
    }
    Eigen::VectorXd cc = theta.array().cos(), ss = theta.array().sin();
    MatrixXcd b2 = cc.asDiagonal() * (a2.adjoint() * u11) - ss.asDiagonal() * (a1.adjoint() * u01);
    b2 = nearest_unitary(b2);
    auto out = multiplexed(b1, b2, k);
    UcgSpec mid;
    mid.n = k;
    mid.target = 0;
    for (int i = 0; i < h; ++i) mid.branches.push_back({cc(i), -ss(i), ss(i), cc(i)});
    out.push_back(mid);
    auto top = multiplexed(a1, a2, k);
    out.insert(out.end(), top.begin(), top.end());
    return out;
}

}  // namespace

std::vector<UcgSpec> unitary_to_ucgs(const UnitarySpec& u) {
    const int n = u.n;
    if (n < 1 || n > 5) throw InvalidParameters("unitary decomposition is limited to 1..5 qubits");
    if (!is_unitary(u, 1e-8)) throw DecompositionFailure("input matrix is not unitary");
    const int dim = 1 << n;
    MatrixXcd m(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = u.at(r, c);
    return demultiplex(m, n);
}

SynthOutput gus_synthesize(const Graph& g, const UnitarySpec& u, int m, bool simulate) {
    const int n = u.n;
    if (g.size() != n + m) throw InvalidParameters("graph must have n+m vertices");
    SynthOutput out;
    out.circuit = Circuit(g.size(), m);
    std::vector<std::string> backends;
    const auto anc = range(n, n + m);
    auto ucgs = unitary_to_ucgs(u);
    for (const auto& v : ucgs) emit_ucg(out.circuit, g, range(0, n), v, anc, &backends);
    TargetSpec target = u;
    out.report = assemble_report(out.circuit, g, simulate ? &target : nullptr, m, join_unique(backends));
    out.report.notes.push_back("ucg_count=" + std::to_string(ucgs.size()));
    return out;
}

}  // namespace qgsynth
