// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <Eigen/Dense>
#include <numbers>

#include "qgsynth/errors.hpp"
#include "qgsynth/targets.hpp"

namespace qgsynth {

namespace {

Eigen::MatrixXcd haar(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    Eigen::MatrixXcd z(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) z(r, c) = {nd(rng), nd(rng)};
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int c = 0; c < dim; ++c) {
        const cplx d = r(c, c);
        if (std::abs(d) > 0.0) q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace

DiagonalSpec random_angles(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ud(-std::numbers::pi, std::numbers::pi);
    std::vector<double> theta(std::size_t{1} << n);
    for (auto& t : theta) t = ud(rng);
    return normalize_diagonal(n, theta);
}

StateSpec random_state(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    StateSpec s;
    s.n = n;
    s.amp.resize(std::size_t{1} << n);
    double norm = 0.0;
    for (auto& a : s.amp) {
        a = {nd(rng), nd(rng)};
        norm += std::norm(a);
    }
    for (auto& a : s.amp) a /= std::sqrt(norm);
    return s;
}

UnitarySpec random_unitary(int n, std::mt19937_64& rng) {
    if (n < 1 || n > 10) throw InvalidParameters("random unitary supports 1 <= n <= 10");
    const int dim = 1 << n;
    const Eigen::MatrixXcd q = haar(dim, rng);
    UnitarySpec u;
    u.n = n;
    u.m.resize(std::size_t(dim) * dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) u.m[std::size_t(r) * dim + c] = q(r, c);
    return u;
}

UcgSpec random_ucg(int n, std::mt19937_64& rng, int target) {
    UcgSpec v;
    v.n = n;
    v.target = target;
    for (std::size_t b = 0; b < (std::size_t{1} << (n - 1)); ++b) {
        const Eigen::MatrixXcd q = haar(2, rng);
        v.branches.push_back({q(0, 0), q(0, 1), q(1, 0), q(1, 1)});
    }
    return v;
}

}  // namespace qgsynth
