// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <random>
#include <variant>
#include <vector>

#include "qgsynth/circuit.hpp"
#include "qgsynth/gray_walsh.hpp"

namespace qgsynth {

struct StateSpec {
    int n = 0;
    std::vector<cplx> amp;  // size 2^n, x_1 is the most significant bit
};

// Block-diagonal gate: branch b acts on the target qubit when the remaining
// qubits, read in increasing order, spell b.
struct UcgSpec {
    int n = 0;
    std::vector<Mat2> branches;  // size 2^(n-1)
    int target = -1;             // 0-based, -1 means the last qubit
    int target_qubit() const { return target < 0 ? n - 1 : target; }
};

struct UnitarySpec {
    int n = 0;
    std::vector<cplx> m;  // row-major 2^n x 2^n
    cplx at(std::size_t r, std::size_t c) const { return m[r * (std::size_t{1} << n) + c]; }
};

using TargetSpec = std::variant<DiagonalSpec, StateSpec, UcgSpec, UnitarySpec>;

UnitarySpec ucg_matrix(const UcgSpec& v);

// Seeded random targets; the unitaries are Haar distributed.
DiagonalSpec random_angles(int n, std::mt19937_64& rng);
StateSpec random_state(int n, std::mt19937_64& rng);
UnitarySpec random_unitary(int n, std::mt19937_64& rng);
UcgSpec random_ucg(int n, std::mt19937_64& rng, int target = -1);
bool is_unitary(const Mat2& u, double tol = 1e-12);
bool is_unitary(const UnitarySpec& u, double tol = 1e-10);

}  // namespace qgsynth
