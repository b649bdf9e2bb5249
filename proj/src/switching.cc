// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/switching.h"

#include <algorithm>
#include <bit>

#include "qcx/errors.h"

namespace qcx {

namespace {

// Signed product of ops over a combination (ops pairwise commute).
PauliOperator combine(const std::vector<PauliOperator> &ops, const BitVec &combo, size_t n) {
    PauliOperator acc = PauliOperator::identity(n);
    for (size_t i : combo.set_indices()) {
        acc = commuting_product(acc, ops[i]);
    }
    return acc;
}

void require_abelian_without_minus_identity(const std::vector<PauliOperator> &ops, size_t n) {
    for (size_t i = 0; i < ops.size(); i++) {
        for (size_t j = i + 1; j < ops.size(); j++) {
            if (!commutes(ops[i], ops[j])) {
                throw InvalidArgument("stabilizer list is not abelian");
            }
        }
    }
    if (ops.empty()) {
        return;
    }
    for (const auto &dep : nullspace(symplectic_matrix(ops, n).transposed())) {
        if (combine(ops, dep, n).is_minus_identity()) {
            throw SignInconsistency("stabilizer group contains -I");
        }
    }
}

// Sign of the element of <ops> with symplectic vector v.
bool sign_in(const std::vector<PauliOperator> &ops, const Echelon &e, const BitVec &v, size_t n) {
    auto combo = e.express(v);
    if (!combo) {
        throw Error("vector outside the span");
    }
    return combine(ops, *combo, n).negative;
}

size_t intersection_dim(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.num_rows() == 0 || b.num_rows() == 0) {
        return 0;
    }
    return row_space_intersection(a, b).size();
}

}  // namespace

std::vector<PauliOperator> signed_intersection(const std::vector<PauliOperator> &s1,
                                               const std::vector<PauliOperator> &s2, size_t n) {
    require_abelian_without_minus_identity(s1, n);
    require_abelian_without_minus_identity(s2, n);
    if (s1.empty() || s2.empty()) {
        return {};
    }
    BinaryMatrix m1 = symplectic_matrix(s1, n), m2 = symplectic_matrix(s2, n);
    Echelon e1 = echelon(m1), e2 = echelon(m2);
    std::vector<BitVec> common = row_space_intersection(m1, m2);
    // The sign difference is a homomorphism on the intersection; keep its kernel.
    std::vector<bool> differs;
    for (const auto &v : common) {
        differs.push_back(sign_in(s1, e1, v, n) != sign_in(s2, e2, v, n));
    }
    std::optional<size_t> pivot;
    for (size_t i = 0; i < common.size(); i++) {
        if (differs[i]) {
            pivot = i;
            break;
        }
    }
    std::vector<PauliOperator> out;
    for (size_t i = 0; i < common.size(); i++) {
        if (pivot && i == *pivot) {
            continue;
        }
        BitVec v = common[i];
        if (differs[i]) {
            v ^= common[*pivot];
        }
        out.push_back(PauliOperator::from_symplectic(v, sign_in(s1, e1, v, n)));
    }
    return out;
}

CodeSwitchProtocol protocol_from_codes(const SubsystemCode &c1, const SubsystemCode &c2) {
    if (c1.n != c2.n) {
        throw DimensionMismatch("codes act on different numbers of qubits");
    }
    size_t n = c1.n;
    CodeSwitchProtocol p;
    p.code1 = c1;
    p.code2 = c2;
    std::vector<PauliOperator> gens = c1.gauge_generators;
    gens.insert(gens.end(), c2.gauge_generators.begin(), c2.gauge_generators.end());
    p.parent = code_from_gauge_generators(n, gens, c1.name + "+" + c2.name);
    p.parent_stabilizer = signed_intersection(c1.stabilizer_basis, c2.stabilizer_basis, n);

    BinaryMatrix inter = BinaryMatrix::with_cols(2 * n);
    for (const auto &s : p.parent_stabilizer) {
        inter.append_row(s.symplectic());
    }
    BinaryMatrix centre = BinaryMatrix::with_cols(2 * n);
    for (const auto &s : p.parent.stabilizer_basis) {
        centre.append_row(s.symplectic());
    }
    if (!same_row_space(inter, centre)) {
        p.consistent = false;
        p.diagnostic = "signed intersection of the stabilizer groups has rank " +
                       std::to_string(p.parent_stabilizer.size()) + " but the parent centre has rank " +
                       std::to_string(p.parent.s);
        return p;
    }
    Echelon ec = echelon(centre);
    for (const auto &s : p.parent_stabilizer) {
        if (sign_in(p.parent.stabilizer_basis, ec, s.symplectic(), n) != s.negative) {
            p.consistent = false;
            p.diagnostic = "sign of " + format_pauli(s) + " differs between the codes and the parent";
            return p;
        }
    }
    return p;
}

Verdict protocol_verdict(const CodeSwitchProtocol &p) {
    return contextuality_verdict(p.parent);
}

CsstAudit triorthogonality_audit(const BinaryMatrix &g1, size_t c2_row_count) {
    if (c2_row_count > g1.num_rows()) {
        throw InvalidArgument("C2 row count exceeds the number of rows");
    }
    CsstAudit a;
    const auto &rows = g1.rows();
    size_t m = rows.size(), n = g1.num_cols();
    for (size_t i = 0; i < m; i++) {
        for (size_t j = i + 1; j < m; j++) {
            BitVec ij = rows[i];
            ij &= rows[j];
            if (ij.popcount() % 2) {
                a.pair_violations.push_back({i, j});
            }
            for (size_t k = j + 1; k < m; k++) {
                BitVec ijk = ij;
                ijk &= rows[k];
                if (ijk.popcount() % 2) {
                    a.triple_violations.push_back({i, j, k});
                }
            }
        }
    }
    a.triorthogonal = a.pair_violations.empty() && a.triple_violations.empty();

    BinaryMatrix c2(n, std::vector<BitVec>(rows.end() - static_cast<long>(c2_row_count), rows.end()));
    std::vector<BitVec> basis = row_space_basis(c2);
    a.dim_gap = static_cast<long long>(n) - static_cast<long long>(rank(g1)) - static_cast<long long>(basis.size());
    if (basis.size() <= kWeightEnumerationCap) {
        a.weights_checked = true;
        a.weights_mod8_ok = true;
        a.complement_weights_mod8_ok = true;
        BitVec cur(n);
        for (uint64_t step = 0; step < (uint64_t{1} << basis.size()); step++) {
            if (step) {
                cur ^= basis[static_cast<size_t>(std::countr_zero(step))];
            }
            size_t w = cur.popcount();
            if (w % 8 != 0) {
                a.weights_mod8_ok = false;
            }
            if ((n - w) % 8 != 1) {
                a.complement_weights_mod8_ok = false;
            }
        }
    }
    return a;
}

bool eta_invariance(const BinaryMatrix &stabilizer_rows) {
    size_t cols = stabilizer_rows.num_cols();
    if (cols % 2) {
        throw InvalidArgument("symplectic rows need an even number of columns");
    }
    size_t n = cols / 2;
    Echelon e = echelon(stabilizer_rows);
    for (const auto &r : stabilizer_rows.rows()) {
        if (!e.contains(r.slice(n, cols).concat(r.slice(0, n)))) {
            return false;
        }
    }
    return true;
}

BinaryMatrix pure_part(const std::vector<PauliOperator> &ops, size_t n, char letter) {
    if (letter != 'X' && letter != 'Z') {
        throw InvalidArgument("pure part is taken for X or Z");
    }
    // Combinations whose other half cancels.
    BinaryMatrix other = BinaryMatrix::with_cols(ops.size());
    for (size_t q = 0; q < n; q++) {
        BitVec col(ops.size());
        for (size_t i = 0; i < ops.size(); i++) {
            col.set(i, letter == 'X' ? ops[i].z.get(q) : ops[i].x.get(q));
        }
        other.append_row(col);
    }
    BinaryMatrix out = BinaryMatrix::with_cols(n);
    for (const auto &combo : nullspace(other)) {
        BitVec v(n);
        for (size_t i : combo.set_indices()) {
            v ^= letter == 'X' ? ops[i].x : ops[i].z;
        }
        out.append_row(v);
    }
    return BinaryMatrix(n, row_space_basis(out));
}

namespace {

bool is_css(const SubsystemCode &c) {
    size_t n = c.n;
    if (c.g != 0) {
        return false;
    }
    BinaryMatrix px = pure_part(c.stabilizer_basis, n, 'X');
    BinaryMatrix pz = pure_part(c.stabilizer_basis, n, 'Z');
    return px.num_rows() + pz.num_rows() == c.s;
}

BinaryMatrix rows_of(const std::vector<PauliOperator> &ops, size_t n) {
    return symplectic_matrix(ops, n);
}

}  // namespace

BoundCertificate csst_bound_certificate(const CodeSwitchProtocol &p, const CertificateOptions &opts) {
    BoundCertificate cert;
    size_t n = p.code1.n;
    auto &hyp = cert.hypotheses;
    auto record = [&](const std::string &name, bool ok) { hyp.push_back({name, ok ? "ok" : "failed"}); };

    // Role assignment: the transversal-T code must be CSS and the other eta-invariant.
    const SubsystemCode *q1 = &p.code1, *q2 = &p.code2;
    auto eta_ok = [&](const SubsystemCode &c) { return eta_invariance(rows_of(c.stabilizer_basis, n)); };
    if (!(is_css(*q1) && eta_ok(*q2)) && is_css(*q2) && eta_ok(*q1)) {
        std::swap(q1, q2);
    }
    cert.t_code = q1->name;
    record("t_code_is_css_stabilizer_code", is_css(*q1));
    record("h_code_eta_invariant", eta_ok(*q2));

    BinaryMatrix c2 = pure_part(q1->stabilizer_basis, n, 'X');
    BinaryMatrix c1_perp = pure_part(q1->stabilizer_basis, n, 'Z');
    cert.c2_dim = c2.num_rows();
    cert.c1_perp_dim = c1_perp.num_rows();
    bool nested = true;
    Echelon e_perp = echelon(c1_perp);
    for (const auto &r : c2.rows()) {
        nested = nested && e_perp.contains(r);
    }
    record("c2_nonzero", cert.c2_dim > 0);
    record("c2_within_c1_perp", nested);

    // G_{C1} = [1; G_{C2}].
    BinaryMatrix g1 = BinaryMatrix::with_cols(n);
    g1.append_row(BitVec::ones(n));
    for (const auto &r : c2.rows()) {
        g1.append_row(r);
    }
    cert.audit = triorthogonality_audit(g1, c2.num_rows());
    record("triorthogonal", cert.audit.triorthogonal);

    if (!opts.check_logicals) {
        hyp.push_back({"all_ones_logicals", "unchecked"});
    } else {
        PauliOperator lx = PauliOperator::on(n, 'X', BitVec::ones(n).set_indices());
        PauliOperator lz = PauliOperator::on(n, 'Z', BitVec::ones(n).set_indices());
        bool ok = p.parent.k == 1 && !commutes(lx, lz);
        for (const auto &g : p.parent.gauge_generators) {
            ok = ok && commutes(g, lx) && commutes(g, lz);
        }
        BinaryMatrix gauge = rows_of(p.parent.gauge_generators, n);
        ok = ok && !row_space_contains(gauge, lx.symplectic()) && !row_space_contains(gauge, lz.symplectic());
        record("all_ones_logicals", ok);
    }

    // C3: extend a basis of C2 greedily to C1 perp.
    BinaryMatrix span = c2;
    for (const auto &r : c1_perp.rows()) {
        if (!row_space_contains(span, r)) {
            span.append_row(r);
            cert.c3.push_back(r);
        }
    }
    cert.dim_v = cert.c3.size();
    BinaryMatrix v = BinaryMatrix::with_cols(2 * n);
    for (const auto &z : cert.c3) {
        v.append_row(BitVec(n).concat(z));
    }
    BinaryMatrix w1 = rows_of(q1->stabilizer_basis, n);
    BinaryMatrix w2 = rows_of(q2->stabilizer_basis, n);
    cert.dim_v_cap_w2 = intersection_dim(v, w2);
    cert.q1 = cert.dim_v - cert.dim_v_cap_w2;
    cert.q2 = cert.dim_v_cap_w2;
    size_t common = intersection_dim(w1, w2);
    cert.w1_quotient = rank(w1) - common;
    cert.w2_quotient = rank(w2) - common;
    cert.bound = (cert.dim_v + 1) / 2;
    cert.actual_g = p.parent.g;
    cert.holds = cert.q1 <= cert.w1_quotient && cert.q2 <= cert.w2_quotient &&
                 std::max(cert.q1, cert.q2) >= cert.bound && cert.bound <= cert.actual_g;
    return cert;
}

}  // namespace qcx
