// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "cli.h"

int main(int argc, char **argv) {
    return qcx::run_cli(argc, argv, std::cout, std::cerr);
}
