// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_ERRORS_H
#define QCX_ERRORS_H

#include <stdexcept>
#include <string>

namespace qcx {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct AnticommutingFactors : Error {
    using Error::Error;
};

struct NotRealPhase : Error {
    using Error::Error;
};

/// A size limit (closure, clique count, LP columns, statevector qubits, ...) was hit.
struct CapExceeded : Error {
    using Error::Error;
};

struct SignInconsistency : Error {
    using Error::Error;
};

/// Gluing requested on a graph that has the Kirby-Love property.
struct KLGraph : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

}  // namespace qcx

#endif
