// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qgsynth {

// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 synthesis error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchRow {
    std::string task;
    std::string graph_kind;
    int n = 0;
    int m = 0;
    int depth = 0;
    long long size = 0;
    long long two_qubit = 0;
    double bound_max = 0.0;
    double ratio = 0.0;  // depth over the family headline term
};

// m_rule: "zero", "3n", "sqrt" (3 * 2^(n/2)) or a fixed integer.
std::vector<BenchRow> bench_sweep(const std::string& task, const std::string& graph_kind, int n_min, int n_max,
                                  const std::string& m_rule, std::uint64_t seed);
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace qgsynth
