// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstdint>
#include <vector>

namespace qgsynth {

// Bit strings of length n are stored as integers with bit 1 (x_1) as the most
// significant bit, so string index k in [1,n] maps to mask 1 << (n - k).
inline std::uint64_t bit_mask(int n, int k) { return std::uint64_t{1} << (n - k); }

// Largest k with 2^(k-1) dividing j; ruler(0) = 0.
int ruler(std::uint64_t j);

// Flip position h_{ij} of the (n,i) Gray code, i in [1,n], j in [1,2^n].
int gray_index(int i, std::uint64_t j, int n);

struct GrayCode {
    int n = 0;
    int i = 1;
    std::vector<int> flips;                // flips[j-1] = h_{ij}
    std::vector<std::uint64_t> codewords;  // codewords[j-1] = c^i_j
};

GrayCode gray_code(int n, int i);

struct DiagonalSpec {
    int n = 0;
    std::vector<double> theta;  // size 2^n, theta[0] = 0
};

// Shifts theta so theta[0] = 0 and reduces every entry into (-pi, pi].
DiagonalSpec normalize_diagonal(int n, std::vector<double> theta);

struct PhaseCoefficients {
    int n = 0;
    std::vector<double> alpha;  // indexed by s, alpha[0] = 0
};

PhaseCoefficients solve_phase_coefficients(const DiagonalSpec& theta);

// Evaluates sum_s alpha_s <s,x> for every x.
std::vector<double> phases_from_coefficients(const PhaseCoefficients& a);

// In-place unnormalized Walsh-Hadamard transform.
void walsh_hadamard(std::vector<double>& v);

inline int parity(std::uint64_t v) { return __builtin_parityll(v); }

}  // namespace qgsynth
