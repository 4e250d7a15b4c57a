// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Triage Contributors

#include <iostream>
#include <string>
#include <vector>

#include "triage/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return triage::run_cli(args, std::cout, std::cerr);
}
