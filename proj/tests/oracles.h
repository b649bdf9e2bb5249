// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

// Slow, independent reference implementations used only by tests.

#ifndef QCX_TESTS_ORACLES_H
#define QCX_TESTS_ORACLES_H

#include <algorithm>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qcx/dense.h"
#include "qcx/pauli.h"

namespace qcx::oracle {

inline PauliOperator random_pauli(size_t n, std::mt19937_64 &rng, bool allow_sign = true) {
    BitVec x(n), z(n);
    for (size_t q = 0; q < n; q++) {
        x.set(q, rng() & 1);
        z.set(q, rng() & 1);
    }
    return PauliOperator(x, z, allow_sign && (rng() & 1));
}

/// Rank over GF(2) of 0/1 rows, by plain elimination on int vectors.
inline size_t rank(std::vector<std::vector<int>> rows) {
    size_t r = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t c = 0; c < cols && r < rows.size(); c++) {
        size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) {
            p++;
        }
        if (p == rows.size()) {
            continue;
        }
        std::swap(rows[p], rows[r]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && rows[i][c]) {
                for (size_t k = 0; k < cols; k++) {
                    rows[i][k] ^= rows[r][k];
                }
            }
        }
        r++;
    }
    return r;
}

inline std::vector<int> xz_row(const PauliOperator &p) {
    std::vector<int> v;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        v.push_back(p.x.get(q));
    }
    for (size_t q = 0; q < p.num_qubits(); q++) {
        v.push_back(p.z.get(q));
    }
    return v;
}

/// Commutation by counting qubits where the single-qubit factors differ and
/// neither is the identity.
inline bool commutes_by_letters(const PauliOperator &a, const PauliOperator &b) {
    size_t clash = 0;
    for (size_t q = 0; q < a.num_qubits(); q++) {
        char la = a.letter(q), lb = b.letter(q);
        if (la != 'I' && lb != 'I' && la != lb) {
            clash++;
        }
    }
    return clash % 2 == 0;
}

/// Gauge-qubit count as half the rank of the commutation matrix.
inline size_t gauge_count(const std::vector<PauliOperator> &gens) {
    std::vector<std::vector<int>> gram;
    for (const auto &a : gens) {
        std::vector<int> row;
        for (const auto &b : gens) {
            row.push_back(commutes_by_letters(a, b) ? 0 : 1);
        }
        gram.push_back(row);
    }
    return rank(gram) / 2;
}

inline size_t symplectic_rank(const std::vector<PauliOperator> &ops) {
    std::vector<std::vector<int>> rows;
    for (const auto &p : ops) {
        rows.push_back(xz_row(p));
    }
    return rank(rows);
}

inline bool matrices_equal(const DenseMatrix &a, const DenseMatrix &b, double tol = 1e-12) {
    return a.dim == b.dim && max_abs_diff(a, b) <= tol;
}

/// Partial closure computed with dense matrices only (n <= 3).
inline std::set<PauliOperator> dense_closure(const std::vector<PauliOperator> &base) {
    std::vector<PauliOperator> found;
    std::vector<DenseMatrix> mats;
    auto add = [&](const PauliOperator &p) {
        if (std::find(found.begin(), found.end(), p) == found.end()) {
            found.push_back(p);
            mats.push_back(dense_matrix(p));
            return true;
        }
        return false;
    };
    for (const auto &p : base) {
        add(p);
    }
    size_t n = base.empty() ? 0 : base[0].num_qubits();
    bool grew = true;
    while (grew) {
        grew = false;
        size_t m = found.size();
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                DenseMatrix ab = matmul(mats[i], mats[j]);
                if (!matrices_equal(ab, matmul(mats[j], mats[i]))) {
                    continue;
                }
                // Identify the product among all signed Paulis by matrix comparison.
                for (uint64_t code = 0; code < (uint64_t{1} << (2 * n + 1)); code++) {
                    BitVec x(n), z(n);
                    for (size_t q = 0; q < n; q++) {
                        x.set(q, (code >> q) & 1);
                        z.set(q, (code >> (n + q)) & 1);
                    }
                    PauliOperator cand(x, z, (code >> (2 * n)) & 1);
                    if (matrices_equal(dense_matrix(cand), ab)) {
                        grew |= add(cand);
                        break;
                    }
                }
            }
        }
    }
    return {found.begin(), found.end()};
}

/// Adjacency given as a list of bitmasks; four nested loops over vertices.
inline bool kirby_love(const std::vector<std::vector<bool>> &adj) {
    size_t m = adj.size();
    for (size_t a = 0; a < m; a++) {
        for (size_t b = 0; b < m; b++) {
            for (size_t c = 0; c < m; c++) {
                for (size_t d = 0; d < m; d++) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) {
                        continue;
                    }
                    if (adj[a][b] && adj[a][c] && !adj[a][d] && !adj[b][c]) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

/// Maximal cliques by enumerating every vertex subset (m <= 16).
inline std::set<std::vector<size_t>> maximal_cliques(const std::vector<std::vector<bool>> &adj) {
    size_t m = adj.size();
    std::vector<uint32_t> cliques;
    for (uint32_t s = 1; s < (uint32_t{1} << m); s++) {
        bool ok = true;
        for (size_t i = 0; i < m && ok; i++) {
            for (size_t j = i + 1; j < m && ok; j++) {
                if ((s >> i & 1) && (s >> j & 1) && !adj[i][j]) {
                    ok = false;
                }
            }
        }
        if (ok) {
            cliques.push_back(s);
        }
    }
    std::set<std::vector<size_t>> out;
    for (uint32_t s : cliques) {
        bool maximal = true;
        for (uint32_t t : cliques) {
            if (t != s && (t & s) == s) {
                maximal = false;
                break;
            }
        }
        if (maximal) {
            std::vector<size_t> v;
            for (size_t i = 0; i < m; i++) {
                if (s >> i & 1) {
                    v.push_back(i);
                }
            }
            out.insert(v);
        }
    }
    return out;
}

/// Projector (I + (-1)^b P)/2 applied to v.
inline StateVector project(const PauliOperator &p, int b, const StateVector &v) {
    DenseMatrix m = dense_matrix(p);
    StateVector out(v.size());
    double s = b ? -1.0 : 1.0;
    for (size_t r = 0; r < m.dim; r++) {
        std::complex<double> acc = 0;
        for (size_t c = 0; c < m.dim; c++) {
            acc += m.at(r, c) * v[c];
        }
        out[r] = 0.5 * (v[r] + s * acc);
    }
    return out;
}

}  // namespace qcx::oracle

#endif
