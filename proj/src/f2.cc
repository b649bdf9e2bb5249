// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/f2.h"

#include "qcx/errors.h"

namespace qcx {

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BinaryMatrix::BinaryMatrix(size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != cols_) {
            throw DimensionMismatch("matrix row has wrong length");
        }
    }
}

BinaryMatrix BinaryMatrix::identity(size_t k) {
    BinaryMatrix m(k, k);
    for (size_t i = 0; i < k; i++) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BinaryMatrix();
    }
    std::vector<BitVec> out;
    for (const auto &s : rows) {
        out.push_back(BitVec::from_string(s));
    }
    return BinaryMatrix(rows[0].size(), std::move(out));
}

void BinaryMatrix::append_row(const BitVec &r) {
    if (rows_.empty() && cols_ == 0) {
        cols_ = r.size();
    }
    if (r.size() != cols_) {
        throw DimensionMismatch("appended row has wrong length");
    }
    rows_.push_back(r);
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].set_indices()) {
            t.set(c, r, true);
        }
    }
    return t;
}

BitVec BinaryMatrix::apply(const BitVec &v) const {
    if (v.size() != cols_) {
        throw DimensionMismatch("vector length does not match column count");
    }
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        out.set(r, rows_[r].dot(v));
    }
    return out;
}

BitVec Echelon::reduce(const BitVec &v) const {
    BitVec r = v;
    for (size_t k = 0; k < rows.size(); k++) {
        if (r.get(pivots[k])) {
            r ^= rows[k];
        }
    }
    return r;
}

bool Echelon::contains(const BitVec &v) const {
    return reduce(v).none();
}

std::optional<BitVec> Echelon::express(const BitVec &v) const {
    BitVec r = v;
    BitVec combo(num_original_rows);
    for (size_t k = 0; k < rows.size(); k++) {
        if (r.get(pivots[k])) {
            r ^= rows[k];
            combo ^= combinations[k];
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return combo;
}

Echelon echelon(const BinaryMatrix &m) {
    Echelon e;
    e.cols = m.num_cols();
    e.num_original_rows = m.num_rows();
    std::vector<BitVec> work = m.rows();
    std::vector<BitVec> combos;
    for (size_t r = 0; r < work.size(); r++) {
        combos.push_back(BitVec::from_indices(work.size(), {r}));
    }
    std::vector<bool> used(work.size(), false);
    std::vector<size_t> pivot_rows;
    for (size_t c = 0; c < e.cols; c++) {
        size_t pivot = work.size();
        for (size_t r = 0; r < work.size(); r++) {
            if (!used[r] && work[r].get(c)) {
                pivot = r;
                break;
            }
        }
        if (pivot == work.size()) {
            continue;
        }
        used[pivot] = true;
        for (size_t r = 0; r < work.size(); r++) {
            if (r != pivot && work[r].get(c)) {
                work[r] ^= work[pivot];
                combos[r] ^= combos[pivot];
            }
        }
        pivot_rows.push_back(pivot);
        e.pivots.push_back(c);
    }
    for (size_t r : pivot_rows) {
        e.rows.push_back(work[r]);
        e.combinations.push_back(combos[r]);
    }
    return e;
}

size_t rank(const BinaryMatrix &m) {
    return echelon(m).rank();
}

std::optional<BitVec> solve(const BinaryMatrix &m, const BitVec &b) {
    if (b.size() != m.num_rows()) {
        throw DimensionMismatch("right-hand side length does not match row count");
    }
    // Augmented columns [m | b]; a pivot in the last column means inconsistency.
    size_t cols = m.num_cols();
    BinaryMatrix aug = BinaryMatrix::with_cols(cols + 1);
    for (size_t r = 0; r < m.num_rows(); r++) {
        BitVec tail(1);
        tail.set(0, b.get(r));
        BitVec row = m.row(r).concat(tail);
        aug.append_row(row);
    }
    Echelon e = echelon(aug);
    BitVec s(cols);
    for (size_t k = 0; k < e.rank(); k++) {
        if (e.pivots[k] == cols) {
            return std::nullopt;
        }
        if (e.rows[k].get(cols)) {
            s.set(e.pivots[k], true);
        }
    }
    return s;
}

std::vector<BitVec> nullspace(const BinaryMatrix &m) {
    Echelon e = echelon(m);
    size_t cols = m.num_cols();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> basis;
    for (size_t f = 0; f < cols; f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVec v(cols);
        v.set(f, true);
        for (size_t k = 0; k < e.rank(); k++) {
            if (e.rows[k].get(f)) {
                v.set(e.pivots[k], true);
            }
        }
        basis.push_back(v);
    }
    return basis;
}

std::vector<BitVec> row_space_intersection(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.num_cols() != b.num_cols()) {
        throw DimensionMismatch("row space intersection needs equal column counts");
    }
    size_t c = a.num_cols();
    BinaryMatrix z = BinaryMatrix::with_cols(2 * c);
    for (const auto &r : a.rows()) {
        z.append_row(r.concat(r));
    }
    for (const auto &r : b.rows()) {
        z.append_row(r.concat(BitVec(c)));
    }
    Echelon e = echelon(z);
    std::vector<BitVec> out;
    for (size_t k = 0; k < e.rank(); k++) {
        if (e.pivots[k] >= c) {
            out.push_back(e.rows[k].slice(c, 2 * c));
        }
    }
    return row_space_basis(BinaryMatrix(c, out));
}

std::vector<BitVec> row_space_basis(const BinaryMatrix &m) {
    return echelon(m).rows;
}

bool row_space_contains(const BinaryMatrix &m, const BitVec &v) {
    return echelon(m).contains(v);
}

bool same_row_space(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.num_cols() != b.num_cols()) {
        return false;
    }
    return echelon(a).rows == echelon(b).rows;
}

BinaryMatrix symplectic_gram(const std::vector<PauliOperator> &rows) {
    BinaryMatrix g(rows.size(), rows.size());
    for (size_t i = 0; i < rows.size(); i++) {
        for (size_t j = i + 1; j < rows.size(); j++) {
            if (!commutes(rows[i], rows[j])) {
                g.set(i, j, true);
                g.set(j, i, true);
            }
        }
    }
    return g;
}

BinaryMatrix symplectic_matrix(const std::vector<PauliOperator> &ops, size_t n) {
    BinaryMatrix m = BinaryMatrix::with_cols(2 * n);
    for (const auto &p : ops) {
        if (p.num_qubits() != n) {
            throw DimensionMismatch("operator has the wrong number of qubits");
        }
        m.append_row(p.symplectic());
    }
    return m;
}

}  // namespace qcx
