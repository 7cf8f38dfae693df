// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The qgsynth Authors

#include <iostream>

#include "qgsynth/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qgsynth::run_command(args, std::cout, std::cerr);
}
