// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_PAULI_H
#define QCX_PAULI_H

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qcx/bitvec.h"
#include "qcx/errors.h"

namespace qcx {

/// A Pauli observable with real global phase: (-1)^sign * P_0 (x) ... (x) P_{n-1}.
///
/// Qubit j carries I, X, Y or Z according to (x_j, z_j) = (0,0), (1,0), (1,1), (0,1).
struct PauliOperator {
    BitVec x;
    BitVec z;
    bool negative = false;

    PauliOperator() = default;
    PauliOperator(BitVec x, BitVec z, bool negative);

    static PauliOperator identity(size_t n);
    static PauliOperator minus_identity(size_t n);
    /// Single-qubit operator; letter is one of I, X, Y, Z.
    static PauliOperator single(size_t n, size_t qubit, char letter);
    /// Operator with the given letter on every listed qubit.
    static PauliOperator on(size_t n, char letter, const std::vector<size_t> &qubits);

    size_t num_qubits() const {
        return x.size();
    }
    int sign() const {
        return negative ? -1 : 1;
    }
    bool is_identity_up_to_sign() const {
        return x.none() && z.none();
    }
    bool is_identity() const {
        return is_identity_up_to_sign() && !negative;
    }
    bool is_minus_identity() const {
        return is_identity_up_to_sign() && negative;
    }
    char letter(size_t qubit) const;
    PauliOperator negated() const;
    /// The (x|z) vector of length 2n.
    BitVec symplectic() const;
    static PauliOperator from_symplectic(const BitVec &xz, bool negative);

    bool operator==(const PauliOperator &other) const = default;
    /// Lexicographic on (sign, x, z); + sorts before -.
    std::strong_ordering operator<=>(const PauliOperator &other) const;
};

struct PauliHash {
    size_t operator()(const PauliOperator &p) const;
};

/// Element i^phase * X^x Z^z of the Pauli group, with all X factors to the left.
struct GroupElement {
    BitVec x;
    BitVec z;
    uint8_t phase = 0;

    static GroupElement from_pauli(const PauliOperator &p);
    static GroupElement identity(size_t n);
    size_t num_qubits() const {
        return x.size();
    }
    bool is_real() const;
    /// Defined exactly when is_real(); throws NotRealPhase otherwise.
    PauliOperator to_pauli() const;
    /// Drops a factor of i when present, so the result is always an observable.
    PauliOperator hermitian_part() const;

    bool operator==(const GroupElement &other) const = default;
};

GroupElement mul(const GroupElement &a, const GroupElement &b);
GroupElement mul(const PauliOperator &a, const PauliOperator &b);

bool commutes(const PauliOperator &p, const PauliOperator &q);
/// pq for commuting p and q; throws AnticommutingFactors otherwise.
PauliOperator commuting_product(const PauliOperator &p, const PauliOperator &q);
size_t weight(const PauliOperator &p);

enum class PauliStyle { Dense, Sparse };

/// Dense `[+|-]?[IXYZ]{n}` or sparse `[+|-]?X3*Z5` (indices 0-based, tokens split by `*` or spaces).
PauliOperator parse_pauli(std::string_view text, size_t n);
std::string format_pauli(const PauliOperator &p, PauliStyle style = PauliStyle::Dense);
/// Comma-separated list of operators.
std::vector<PauliOperator> parse_pauli_list(std::string_view text, size_t n);

}  // namespace qcx

#endif
