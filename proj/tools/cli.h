// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_TOOLS_CLI_H
#define QCX_TOOLS_CLI_H

#include <ostream>

namespace qcx {

/// Runs the qcx command line. Returns the process exit code: 0 when the
/// analysis completed (whatever the verdict), 1 on usage, parse or cap errors.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qcx

#endif
