// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#pragma once

#include <string>

#include "qgsynth/graphs.hpp"
#include "qgsynth/gray_walsh.hpp"
#include "qgsynth/targets.hpp"

namespace qgsynth {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Graph descriptors use 1-based vertices in explicit edge lists.
Graph parse_graph(const std::string& text);
std::string encode_graph(const Graph& g);

DiagonalSpec parse_angles(const std::string& text);
std::string encode_angles(const DiagonalSpec& d);

StateSpec parse_state(const std::string& text);
std::string encode_state(const StateSpec& s);

UnitarySpec parse_unitary(const std::string& text);
std::string encode_unitary(const UnitarySpec& u);

// {"n": k, "target": t (1-based, optional), "branches": [{"re": [[..]], "im": [[..]]}, ...]}
UcgSpec parse_ucg(const std::string& text);
std::string encode_ucg(const UcgSpec& u);

}  // namespace qgsynth
