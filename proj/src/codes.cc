// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/codes.h"

#include "qcx/errors.h"

namespace qcx {

namespace {

GroupElement product_of(const std::vector<PauliOperator> &ops, const BitVec &combo, size_t n) {
    GroupElement acc = GroupElement::identity(n);
    for (size_t i : combo.set_indices()) {
        acc = mul(acc, GroupElement::from_pauli(ops[i]));
    }
    return acc;
}

PauliOperator observable_product(const PauliOperator &a, const PauliOperator &b) {
    return mul(a, b).hermitian_part();
}

// Throws when some product of the (pairwise commuting) operators equals -I.
void check_no_minus_identity(const std::vector<PauliOperator> &ops, size_t n) {
    if (ops.empty()) {
        return;
    }
    for (const auto &dep : nullspace(symplectic_matrix(ops, n).transposed())) {
        GroupElement p = product_of(ops, dep, n);
        if (p.is_real() && p.to_pauli().is_minus_identity()) {
            throw SignInconsistency("stabilizer generators multiply to -I");
        }
    }
}

}  // namespace

SubsystemCode code_from_gauge_generators(size_t n, const std::vector<PauliOperator> &gens, std::string name) {
    if (gens.empty()) {
        throw InvalidArgument("a code needs at least one gauge generator");
    }
    SubsystemCode c;
    c.name = std::move(name);
    c.n = n;
    c.gauge_generators = gens;
    c.rank = rank(symplectic_matrix(gens, n));
    BinaryMatrix gram = symplectic_gram(gens);
    size_t gram_rank = rank(gram);
    c.g = gram_rank / 2;

    // Combinations of generators in the centre. Whether the ordered product is
    // imaginary is a linear function q on this space; keep at most one basis
    // vector with q = 1, preferring one that multiplies to a phase times I.
    std::vector<BitVec> radical = nullspace(gram);
    std::vector<GroupElement> prods;
    for (const auto &r : radical) {
        prods.push_back(product_of(gens, r, n));
    }
    auto is_trivial = [](const GroupElement &p) { return p.x.none() && p.z.none(); };
    std::optional<size_t> odd;
    for (size_t i = 0; i < radical.size(); i++) {
        if (prods[i].is_real()) {
            continue;
        }
        if (!odd || (is_trivial(prods[i]) && !is_trivial(prods[*odd]))) {
            odd = i;
        }
    }
    std::vector<PauliOperator> candidates;
    for (size_t i = 0; i < radical.size(); i++) {
        BitVec combo = radical[i];
        if (odd && i != *odd && !prods[i].is_real()) {
            combo ^= radical[*odd];
        }
        GroupElement p = product_of(gens, combo, n);
        bool trivial = is_trivial(p);
        if (p.is_real()) {
            PauliOperator op = p.to_pauli();
            if (op.is_minus_identity()) {
                throw SignInconsistency("gauge generators multiply to -I within the stabilizer");
            }
            if (!trivial) {
                candidates.push_back(op);
            }
        } else if (!trivial) {
            candidates.push_back(p.hermitian_part());
        }
    }
    check_no_minus_identity(candidates, n);
    BinaryMatrix chosen = BinaryMatrix::with_cols(2 * n);
    for (const auto &op : candidates) {
        BitVec v = op.symplectic();
        if (!row_space_contains(chosen, v)) {
            chosen.append_row(v);
            c.stabilizer_basis.push_back(op);
        }
    }
    c.s = c.stabilizer_basis.size();
    if (c.s + gram_rank != c.rank) {
        throw Error("stabilizer and gauge ranks are inconsistent");
    }

    // Symplectic Gram-Schmidt on the generators.
    std::vector<PauliOperator> work = gens;
    while (c.canonical_pairs.size() < c.g) {
        size_t bi = 0, bj = 0;
        bool found = false;
        for (size_t i = 0; i < work.size() && !found; i++) {
            for (size_t j = i + 1; j < work.size(); j++) {
                if (!commutes(work[i], work[j])) {
                    bi = i;
                    bj = j;
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            throw Error("symplectic reduction ran out of anticommuting pairs");
        }
        PauliOperator u = work[bi], w = work[bj];
        c.canonical_pairs.push_back({u, w});
        std::vector<PauliOperator> rest;
        for (size_t i = 0; i < work.size(); i++) {
            if (i == bi || i == bj) {
                continue;
            }
            PauliOperator v = work[i];
            if (!commutes(v, w)) {
                v = observable_product(v, u);
            }
            if (!commutes(v, u)) {
                v = observable_product(v, w);
            }
            rest.push_back(v);
        }
        work = std::move(rest);
    }
    c.k = n - c.s - c.g;
    return c;
}

std::vector<PauliOperator> check_measurements(const SubsystemCode &c) {
    std::vector<PauliOperator> out = c.stabilizer_basis;
    for (const auto &[x, z] : c.canonical_pairs) {
        out.push_back(x);
        out.push_back(z);
    }
    return out;
}

std::string to_string(Classification c) {
    return c == Classification::Noncontextual ? "noncontextual" : "strongly contextual in a partial closure";
}

Verdict contextuality_verdict(const SubsystemCode &c) {
    Verdict v;
    v.g = c.g;
    if (c.g >= 2) {
        v.classification = Classification::StronglyContextualInPartialClosure;
        const auto &p1 = c.canonical_pairs[0];
        const auto &p2 = c.canonical_pairs[1];
        v.kl_witness = std::array<PauliOperator, 4>{p1.first, p2.first, p2.second, p1.second};
    }
    return v;
}

BinaryMatrix dotted_complement(const BinaryMatrix &w) {
    BinaryMatrix m = w;
    m.append_row(BitVec::ones(w.num_cols()));
    return BinaryMatrix(w.num_cols(), nullspace(m));
}

std::vector<PauliOperator> css_generators(const BinaryMatrix &xs, const BinaryMatrix &zs) {
    size_t n = xs.num_cols();
    if (zs.num_cols() != n) {
        throw DimensionMismatch("X and Z parts have different lengths");
    }
    std::vector<PauliOperator> out;
    for (const auto &r : row_space_basis(xs)) {
        out.emplace_back(r, BitVec(n), false);
    }
    for (const auto &r : row_space_basis(zs)) {
        out.emplace_back(BitVec(n), r, false);
    }
    return out;
}

CssSubsystem css_subsystem_from_subspaces(const BinaryMatrix &w_t, const BinaryMatrix &w_c) {
    size_t n = w_t.num_cols();
    if (w_c.num_cols() != n) {
        throw DimensionMismatch("W_T and W_C have different lengths");
    }
    if (n % 2 == 0 || n < 3) {
        throw InvalidArgument("the number of qubits must be odd and at least 3");
    }
    for (const auto *w : {&w_t, &w_c}) {
        for (const auto &r : w->rows()) {
            if (r.popcount() % 2) {
                throw InvalidArgument("subspace row " + r.str() + " has odd weight");
            }
        }
    }
    for (const auto &r : w_t.rows()) {
        if (!row_space_contains(w_c, r)) {
            throw InvalidArgument("W_T is not contained in W_C");
        }
    }
    BinaryMatrix dot_t = dotted_complement(w_t);
    BinaryMatrix dot_c = dotted_complement(w_c);
    for (const auto &r : w_c.rows()) {
        if (!row_space_contains(dot_c, r)) {
            throw InvalidArgument("W_C is not self-orthogonal");
        }
    }
    for (const auto &r : dot_c.rows()) {
        if (!row_space_contains(dot_t, r)) {
            throw InvalidArgument("dotted W_C is not contained in dotted W_T");
        }
    }

    CssSubsystem out;
    out.dim_wt = rank(w_t);
    out.dim_wc = rank(w_c);
    out.base = code_from_gauge_generators(n, css_generators(dot_c, dot_t), "base");
    out.t_code = code_from_gauge_generators(n, css_generators(w_t, dot_t), "T");
    out.c_code = code_from_gauge_generators(n, css_generators(dot_c, dot_c), "C");
    size_t expected = (n - 1) - out.dim_wc - out.dim_wt;
    if (out.base.g != expected) {
        throw Error("gauge count " + std::to_string(out.base.g) + " differs from (n-1) - dim W_C - dim W_T = " +
                    std::to_string(expected));
    }
    return out;
}

GaugeCount doubled_color_code_gauge_count(DoubledColorFamily family, long long t) {
    if (t < 1) {
        throw InvalidArgument("t must be at least 1");
    }
    long long t2 = t * t, t3 = t2 * t;
    switch (family) {
        case DoubledColorFamily::Basic:
            return {2 * t3 + 6 * t2 + 6 * t + 1, (t3 + 3 * t2 + 2 * t) / 2};
        case DoubledColorFamily::Intermediate:
            return {2 * t3 + 7 * t2 + 7 * t - 1, (t3 + 5 * t2 + 4 * t - 4) / 2};
        case DoubledColorFamily::Final:
            return {2 * t3 + 8 * t2 + 6 * t - 1, (t3 + 7 * t2 + 2 * t - 4) / 2};
    }
    throw InvalidArgument("unknown family");
}

}  // namespace qcx
