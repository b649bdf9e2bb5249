// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_DENSE_H
#define QCX_DENSE_H

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qcx/pauli.h"

namespace qcx {

using Complex = std::complex<double>;
using StateVector = std::vector<Complex>;

constexpr size_t kDenseQubitCap = 10;

/// Row-major 2^n x 2^n complex matrix. Basis index bit j is qubit j.
struct DenseMatrix {
    size_t dim = 0;
    std::vector<Complex> data;

    Complex at(size_t r, size_t c) const {
        return data[r * dim + c];
    }
};

/// Literal Kronecker product of the single-qubit factors, times the sign.
DenseMatrix dense_matrix(const PauliOperator &p, size_t cap = kDenseQubitCap);
DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b);
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// p|v> without forming the matrix.
StateVector apply_pauli(const PauliOperator &p, const StateVector &v);
StateVector zero_state(size_t n);
double norm_squared(const StateVector &v);

struct CliffordGate {
    enum Kind { H, S, CNOT } kind;
    size_t a = 0;
    size_t b = 0;
};

/// Uniformly chosen H/S/CNOT word of the given length.
std::vector<CliffordGate> random_clifford_word(size_t n, size_t length, std::mt19937_64 &rng);
/// Conjugation p -> U p U^dagger.
PauliOperator conjugate(const CliffordGate &g, const PauliOperator &p);
void apply_gate(const CliffordGate &g, StateVector &v);

}  // namespace qcx

#endif
