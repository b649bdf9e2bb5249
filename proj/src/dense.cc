// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/dense.h"

#include <bit>
#include <cmath>

#include "qcx/errors.h"

namespace qcx {

namespace {

DenseMatrix single_qubit(char letter) {
    const Complex i(0, 1);
    switch (letter) {
        case 'I':
            return {2, {1, 0, 0, 1}};
        case 'X':
            return {2, {0, 1, 1, 0}};
        case 'Y':
            return {2, {0, -i, i, 0}};
        default:
            return {2, {1, 0, 0, -1}};
    }
}

DenseMatrix kron(const DenseMatrix &a, const DenseMatrix &b) {
    DenseMatrix out{a.dim * b.dim, std::vector<Complex>(a.dim * b.dim * a.dim * b.dim)};
    for (size_t r1 = 0; r1 < a.dim; r1++) {
        for (size_t c1 = 0; c1 < a.dim; c1++) {
            Complex f = a.at(r1, c1);
            if (f == Complex(0)) {
                continue;
            }
            for (size_t r2 = 0; r2 < b.dim; r2++) {
                for (size_t c2 = 0; c2 < b.dim; c2++) {
                    out.data[(r1 * b.dim + r2) * out.dim + c1 * b.dim + c2] = f * b.at(r2, c2);
                }
            }
        }
    }
    return out;
}

}  // namespace

DenseMatrix dense_matrix(const PauliOperator &p, size_t cap) {
    size_t n = p.num_qubits();
    if (n > cap) {
        throw CapExceeded("dense matrix requested for " + std::to_string(n) + " qubits, cap " + std::to_string(cap));
    }
    // Qubit 0 is the least significant index bit, so it is the rightmost factor.
    DenseMatrix m{1, {Complex(p.negative ? -1.0 : 1.0)}};
    for (size_t q = n; q-- > 0;) {
        m = kron(m, single_qubit(p.letter(q)));
    }
    return m;
}

DenseMatrix matmul(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw DimensionMismatch("matrix dimensions differ");
    }
    DenseMatrix out{a.dim, std::vector<Complex>(a.dim * a.dim)};
    for (size_t r = 0; r < a.dim; r++) {
        for (size_t k = 0; k < a.dim; k++) {
            Complex f = a.at(r, k);
            if (f == Complex(0)) {
                continue;
            }
            for (size_t c = 0; c < a.dim; c++) {
                out.data[r * a.dim + c] += f * b.at(k, c);
            }
        }
    }
    return out;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim != b.dim) {
        throw DimensionMismatch("matrix dimensions differ");
    }
    double worst = 0;
    for (size_t k = 0; k < a.data.size(); k++) {
        worst = std::max(worst, std::abs(a.data[k] - b.data[k]));
    }
    return worst;
}

StateVector apply_pauli(const PauliOperator &p, const StateVector &v) {
    size_t n = p.num_qubits();
    if (v.size() != (size_t{1} << n)) {
        throw DimensionMismatch("state vector size does not match qubit count");
    }
    uint64_t xm = 0, zm = 0;
    for (size_t q = 0; q < n; q++) {
        xm |= uint64_t{p.x.get(q)} << q;
        zm |= uint64_t{p.z.get(q)} << q;
    }
    // Y = iXZ: one factor of i per Y, and (-1) for the sign.
    static const Complex kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    int ys = std::popcount(xm & zm);
    Complex global = kPhase[(ys + (p.negative ? 2 : 0)) & 3];
    StateVector out(v.size());
    for (uint64_t k = 0; k < v.size(); k++) {
        double s = (std::popcount(zm & k) & 1) ? -1.0 : 1.0;
        out[k ^ xm] += global * s * v[k];
    }
    return out;
}

StateVector zero_state(size_t n) {
    if (n > kDenseQubitCap) {
        throw CapExceeded("state vector requested for " + std::to_string(n) + " qubits");
    }
    StateVector v(size_t{1} << n);
    v[0] = 1;
    return v;
}

double norm_squared(const StateVector &v) {
    double total = 0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

std::vector<CliffordGate> random_clifford_word(size_t n, size_t length, std::mt19937_64 &rng) {
    std::vector<CliffordGate> word;
    for (size_t k = 0; k < length; k++) {
        uint64_t kind = n >= 2 ? rng() % 3 : rng() % 2;
        CliffordGate g{static_cast<CliffordGate::Kind>(kind), static_cast<size_t>(rng() % n), 0};
        if (g.kind == CliffordGate::CNOT) {
            g.b = static_cast<size_t>(rng() % (n - 1));
            if (g.b >= g.a) {
                g.b++;
            }
        }
        word.push_back(g);
    }
    return word;
}

PauliOperator conjugate(const CliffordGate &g, const PauliOperator &p) {
    PauliOperator out = p;
    switch (g.kind) {
        case CliffordGate::H: {
            bool x = p.x.get(g.a), z = p.z.get(g.a);
            out.negative ^= x && z;
            out.x.set(g.a, z);
            out.z.set(g.a, x);
            break;
        }
        case CliffordGate::S: {
            bool x = p.x.get(g.a), z = p.z.get(g.a);
            out.negative ^= x && z;
            out.z.set(g.a, z ^ x);
            break;
        }
        case CliffordGate::CNOT: {
            bool xc = p.x.get(g.a), zc = p.z.get(g.a), xt = p.x.get(g.b), zt = p.z.get(g.b);
            out.negative ^= xc && zt && (xt == zc);
            out.x.set(g.b, xt ^ xc);
            out.z.set(g.a, zc ^ zt);
            break;
        }
    }
    return out;
}

void apply_gate(const CliffordGate &g, StateVector &v) {
    uint64_t ma = uint64_t{1} << g.a;
    switch (g.kind) {
        case CliffordGate::H: {
            const double r = 1.0 / std::sqrt(2.0);
            for (uint64_t k = 0; k < v.size(); k++) {
                if (!(k & ma)) {
                    Complex a0 = v[k], a1 = v[k | ma];
                    v[k] = r * (a0 + a1);
                    v[k | ma] = r * (a0 - a1);
                }
            }
            break;
        }
        case CliffordGate::S:
            for (uint64_t k = 0; k < v.size(); k++) {
                if (k & ma) {
                    v[k] *= Complex(0, 1);
                }
            }
            break;
        case CliffordGate::CNOT: {
            uint64_t mb = uint64_t{1} << g.b;
            for (uint64_t k = 0; k < v.size(); k++) {
                if ((k & ma) && !(k & mb)) {
                    std::swap(v[k], v[k | mb]);
                }
            }
            break;
        }
    }
}

}  // namespace qcx
