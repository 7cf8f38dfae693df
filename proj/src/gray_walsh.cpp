// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include "qgsynth/gray_walsh.hpp"

#include <cmath>
#include <numbers>

#include "qgsynth/errors.hpp"

namespace qgsynth {

int ruler(std::uint64_t j) {
    if (j == 0) return 0;
    return __builtin_ctzll(j) + 1;
}

int gray_index(int i, std::uint64_t j, int n) {
    if (n < 1 || i < 1 || i > n) throw InvalidParameters("gray_index: i must lie in [1,n]");
    long long z = ruler(j - 1);
    long long v = ((z + i - 2) % n + n) % n;
    return static_cast<int>(v) + 1;
}

GrayCode gray_code(int n, int i) {
    if (n < 1 || n > 30) throw InvalidParameters("gray_code: n must lie in [1,30]");
    GrayCode g;
    g.n = n;
    g.i = i;
    std::uint64_t len = std::uint64_t{1} << n;
    g.flips.resize(len);
    g.codewords.resize(len);
    std::uint64_t c = 0;
    for (std::uint64_t j = 1; j <= len; ++j) {
        g.flips[j - 1] = gray_index(i, j, n);
        if (j > 1) c ^= bit_mask(n, g.flips[j - 1]);
        g.codewords[j - 1] = c;
    }
    return g;
}

DiagonalSpec normalize_diagonal(int n, std::vector<double> theta) {
    if (theta.size() != (std::size_t{1} << n)) throw InvalidParameters("theta must have 2^n entries");
    double t0 = theta[0];
    for (double& t : theta) {
        if (!std::isfinite(t)) throw InvalidParameters("theta entries must be finite");
        t = std::remainder(t - t0, 2 * std::numbers::pi);
    }
    theta[0] = 0.0;
    return DiagonalSpec{n, std::move(theta)};
}

void walsh_hadamard(std::vector<double>& v) {
    for (std::size_t h = 1; h < v.size(); h <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                double a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
}

PhaseCoefficients solve_phase_coefficients(const DiagonalSpec& theta) {
    PhaseCoefficients out;
    out.n = theta.n;
    out.alpha = theta.theta;
    walsh_hadamard(out.alpha);
    double scale = -std::ldexp(1.0, 1 - theta.n);
    for (double& a : out.alpha) a *= scale;
    out.alpha[0] = 0.0;
    return out;
}

std::vector<double> phases_from_coefficients(const PhaseCoefficients& a) {
    std::vector<double> w = a.alpha;
    double total = 0.0;
    for (std::size_t s = 1; s < w.size(); ++s) total += w[s];
    w[0] = 0.0;
    walsh_hadamard(w);
    for (double& v : w) v = (total - v) / 2;
    return w;
}

}  // namespace qgsynth
