// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_F2_H
#define QCX_F2_H

#include <optional>
#include <string>
#include <vector>

#include "qcx/bitvec.h"
#include "qcx/pauli.h"

namespace qcx {

/// Dense matrix over GF(2), stored as packed rows.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols);
    /// All rows must have length cols.
    BinaryMatrix(size_t cols, std::vector<BitVec> rows);
    static BinaryMatrix with_cols(size_t cols) {
        return BinaryMatrix(cols, std::vector<BitVec>{});
    }
    static BinaryMatrix identity(size_t k);
    static BinaryMatrix from_strings(const std::vector<std::string> &rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_[r].set(c, v);
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    const std::vector<BitVec> &rows() const {
        return rows_;
    }
    void append_row(const BitVec &r);
    BinaryMatrix transposed() const;
    /// M * v for a column vector v of length num_cols().
    BitVec apply(const BitVec &v) const;

    bool operator==(const BinaryMatrix &other) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Reduced row echelon form of a matrix, with each reduced row written as a
/// combination of the original rows.
struct Echelon {
    size_t cols = 0;
    std::vector<BitVec> rows;          // nonzero reduced rows
    std::vector<size_t> pivots;        // pivot column of each reduced row
    std::vector<BitVec> combinations;  // over original row indices
    size_t num_original_rows = 0;

    size_t rank() const {
        return rows.size();
    }
    /// Reduces v against the echelon rows; returns the residue.
    BitVec reduce(const BitVec &v) const;
    bool contains(const BitVec &v) const;
    /// A combination c of original rows with sum_i c_i row_i = v, if v lies in the span.
    std::optional<BitVec> express(const BitVec &v) const;
};

/// Deterministic pivoting: pivot columns are taken left to right, and the
/// lowest-index remaining row with a 1 in that column becomes the pivot row.
Echelon echelon(const BinaryMatrix &m);

size_t rank(const BinaryMatrix &m);
/// Some s with m*s = b, or nullopt when the system is inconsistent.
std::optional<BitVec> solve(const BinaryMatrix &m, const BitVec &b);
/// Basis of {v : m*v = 0}.
std::vector<BitVec> nullspace(const BinaryMatrix &m);
/// Basis of rowspace(a) intersected with rowspace(b) (Zassenhaus).
std::vector<BitVec> row_space_intersection(const BinaryMatrix &a, const BinaryMatrix &b);
/// Reduced echelon basis of the row space.
std::vector<BitVec> row_space_basis(const BinaryMatrix &m);
bool row_space_contains(const BinaryMatrix &m, const BitVec &v);
bool same_row_space(const BinaryMatrix &a, const BinaryMatrix &b);
/// Gram[i][j] = 1 iff rows[i] and rows[j] anticommute.
BinaryMatrix symplectic_gram(const std::vector<PauliOperator> &rows);
/// Matrix whose rows are the (x|z) vectors of the operators.
BinaryMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, size_t n);

}  // namespace qcx

#endif
