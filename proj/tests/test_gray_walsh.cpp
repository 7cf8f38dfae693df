// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "qgsynth/errors.hpp"
#include "qgsynth/gray_walsh.hpp"

using namespace qgsynth;

namespace {

double wrap(double a) { return std::remainder(a, 2 * std::numbers::pi); }

std::vector<double> random_theta(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-std::numbers::pi, std::numbers::pi);
    std::vector<double> t(std::size_t{1} << n);
    for (double& v : t) v = d(rng);
    return t;
}

double max_residual(const DiagonalSpec& th, const PhaseCoefficients& a) {
    double worst = 0.0;
    for (std::uint64_t x = 0; x < th.theta.size(); ++x) {
        double s = 0.0;
        for (std::uint64_t k = 1; k < a.alpha.size(); ++k) s += parity(x & k) * a.alpha[k];
        worst = std::max(worst, std::abs(wrap(s - th.theta[x])));
    }
    return worst;
}

}  // namespace

TEST_CASE("ruler function") {
    CHECK(ruler(0) == 0);
    CHECK(ruler(1) == 1);
    CHECK(ruler(2) == 2);
    CHECK(ruler(12) == 3);
    CHECK(ruler(std::uint64_t{1} << 40) == 41);
}

TEST_CASE("boundary flip indices") {
    CHECK(gray_index(1, 1, 5) == 5);
    CHECK(gray_index(2, 1, 5) == 1);
    const auto g = gray_code(3, 1);
    CHECK(g.flips == std::vector<int>{3, 1, 2, 1, 3, 1, 2, 1});
}

TEST_CASE("(3,1) code words") {
    const auto g = gray_code(3, 1);
    CHECK(g.codewords == std::vector<std::uint64_t>{0b000, 0b100, 0b110, 0b010, 0b011, 0b111, 0b101, 0b001});
    CHECK(gray_code(3, 2).flips[1] == 2);
}

TEST_CASE("codes are cyclic and balanced") {
    for (int n = 1; n <= 12; ++n) {
        for (int i = 1; i <= n; ++i) {
            const auto g = gray_code(n, i);
            const std::uint64_t len = std::uint64_t{1} << n;
            CHECK(std::set<std::uint64_t>(g.codewords.begin(), g.codewords.end()).size() == len);
            CHECK(g.codewords[0] == 0);
            for (std::uint64_t j = 2; j <= len; ++j)
                REQUIRE((g.codewords[j - 1] ^ g.codewords[j - 2]) == bit_mask(n, g.flips[j - 1]));
            CHECK((g.codewords[0] ^ g.codewords[len - 1]) == bit_mask(n, g.flips[0]));
            std::vector<std::uint64_t> count(n + 1, 0);
            for (std::uint64_t j = 2; j <= len; ++j) ++count[g.flips[j - 1]];
            for (int k = 1; k <= n; ++k) CHECK(count[(k + i - 2) % n + 1] == (std::uint64_t{1} << (n - k)));
        }
    }
}

TEST_CASE("normalization pins the first phase") {
    const auto d = normalize_diagonal(2, {1.0, 2.0, 3.0, 1.0 + 2 * std::numbers::pi});
    CHECK(d.theta[0] == 0.0);
    CHECK(d.theta[1] == doctest::Approx(1.0));
    CHECK(d.theta[3] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(normalize_diagonal(2, {0.0, 1.0}), InvalidParameters);
}

TEST_CASE("two-qubit closed form") {
    const double a = 0.3, b = -0.8, c = 1.4;
    const auto al = solve_phase_coefficients(normalize_diagonal(2, {0.0, a, b, c}));
    CHECK(al.alpha[0b01] == doctest::Approx((a - b + c) / 2));
    CHECK(al.alpha[0b10] == doctest::Approx((-a + b + c) / 2));
    CHECK(al.alpha[0b11] == doctest::Approx((a + b - c) / 2));
}

TEST_CASE("fast solver satisfies the phase relation") {
    std::mt19937_64 rng(2026);
    for (int n = 1; n <= 10; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const auto th = normalize_diagonal(n, random_theta(n, rng));
            CHECK(max_residual(th, solve_phase_coefficients(th)) <= 1e-9);
        }
    }
}

TEST_CASE("fast solver agrees with a dense solve") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n) {
        const auto th = normalize_diagonal(n, random_theta(n, rng));
        const int d = (1 << n) - 1;
        Eigen::MatrixXd m(d, d);
        Eigen::VectorXd rhs(d);
        for (int x = 1; x <= d; ++x) {
            rhs(x - 1) = th.theta[x];
            for (int s = 1; s <= d; ++s) m(x - 1, s - 1) = parity(std::uint64_t(x & s));
        }
        const Eigen::VectorXd sol = m.partialPivLu().solve(rhs);
        const auto fast = solve_phase_coefficients(th);
        for (int s = 1; s <= d; ++s) CHECK(std::abs(fast.alpha[s] - sol(s - 1)) <= 1e-10);
    }
}

TEST_CASE("solver is linear and inverts") {
    std::mt19937_64 rng(3);
    const int n = 5;
    const auto t1 = normalize_diagonal(n, random_theta(n, rng));
    const auto t2 = normalize_diagonal(n, random_theta(n, rng));
    std::vector<double> sum(t1.theta.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = t1.theta[i] + t2.theta[i];
    const auto a1 = solve_phase_coefficients(t1), a2 = solve_phase_coefficients(t2);
    const auto as = solve_phase_coefficients(DiagonalSpec{n, sum});
    for (std::size_t s = 1; s < sum.size(); ++s) CHECK(as.alpha[s] == doctest::Approx(a1.alpha[s] + a2.alpha[s]));
    const auto back = phases_from_coefficients(a1);
    for (std::size_t x = 0; x < sum.size(); ++x) CHECK(back[x] == doctest::Approx(t1.theta[x]));
}
