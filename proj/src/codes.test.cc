// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/codes.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "qcx/dense.h"
#include "qcx/errors.h"
#include "qcx/graph.h"
#include "qcx/library.h"

namespace qcx {
namespace {

void expect_code_invariants(const SubsystemCode &c) {
    EXPECT_EQ(c.g, oracle::gauge_count(c.gauge_generators)) << c.name;
    EXPECT_EQ(c.rank, oracle::symplectic_rank(c.gauge_generators)) << c.name;
    EXPECT_EQ(c.s + 2 * c.g, c.rank) << c.name;
    EXPECT_EQ(c.k, c.n - c.s - c.g) << c.name;
    EXPECT_EQ(c.canonical_pairs.size(), c.g);
    EXPECT_EQ(oracle::symplectic_rank(c.stabilizer_basis), c.s);
    for (const auto &s : c.stabilizer_basis) {
        for (const auto &g : c.gauge_generators) {
            EXPECT_TRUE(commutes(s, g));
        }
    }
    for (size_t i = 0; i < c.g; i++) {
        const auto &[x, z] = c.canonical_pairs[i];
        EXPECT_FALSE(commutes(x, z));
        for (const auto &s : c.stabilizer_basis) {
            EXPECT_TRUE(commutes(x, s));
            EXPECT_TRUE(commutes(z, s));
        }
        for (size_t j = i + 1; j < c.g; j++) {
            const auto &[x2, z2] = c.canonical_pairs[j];
            EXPECT_TRUE(commutes(x, x2) && commutes(x, z2) && commutes(z, x2) && commutes(z, z2));
        }
    }
    // Check measurements generate the same group modulo phases.
    std::vector<PauliOperator> both = c.gauge_generators;
    auto checks = check_measurements(c);
    EXPECT_EQ(checks.size(), c.s + 2 * c.g);
    both.insert(both.end(), checks.begin(), checks.end());
    EXPECT_EQ(oracle::symplectic_rank(both), c.rank);
    EXPECT_EQ(oracle::symplectic_rank(checks), c.rank);
}

TEST(Codes, SteaneIsAStabilizerCode) {
    SubsystemCode c = steane7();
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.s, 6u);
    EXPECT_EQ(c.g, 0u);
    EXPECT_EQ(check_measurements(c).size(), 6u);
    EXPECT_EQ(contextuality_verdict(c).classification, Classification::Noncontextual);
    expect_code_invariants(c);
}

TEST(Codes, SixQubitCodeHasOneGaugeQubit) {
    SubsystemCode c = six_qubit_6113();
    EXPECT_EQ(c.n, 6u);
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.s, 4u);
    EXPECT_EQ(c.g, 1u);
    Verdict v = contextuality_verdict(c);
    EXPECT_EQ(v.classification, Classification::Noncontextual);
    EXPECT_FALSE(v.kl_witness.has_value());
    EXPECT_FALSE(has_kirby_love(build_graph(check_measurements(c))));
    expect_code_invariants(c);
}

TEST(Codes, BaconShorHasFourGaugeQubits) {
    SubsystemCode c = bacon_shor_3x3();
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.s, 4u);
    EXPECT_EQ(c.g, 4u);
    EXPECT_EQ(check_measurements(c).size(), 12u);
    Verdict v = contextuality_verdict(c);
    EXPECT_EQ(v.classification, Classification::StronglyContextualInPartialClosure);
    ASSERT_TRUE(v.kl_witness.has_value());
    const auto &w = *v.kl_witness;
    // Edges a-b, a-c; non-edges a-d, b-c.
    EXPECT_TRUE(commutes(w[0], w[1]));
    EXPECT_TRUE(commutes(w[0], w[2]));
    EXPECT_FALSE(commutes(w[0], w[3]));
    EXPECT_FALSE(commutes(w[1], w[2]));
    expect_code_invariants(c);
}

TEST(Codes, LibraryInvariants) {
    for (const auto &name : library_names()) {
        SubsystemCode c = library_code(name);
        EXPECT_EQ(c.name, name);
        EXPECT_EQ(c.k, 1u) << name;
        expect_code_invariants(c);
    }
    EXPECT_THROW(library_code("nope"), InvalidArgument);
}

TEST(Codes, StabilizerCodesAreNoncontextual) {
    for (auto c : {steane7(), rm15(), extended_steane15()}) {
        EXPECT_EQ(c.g, 0u);
        EXPECT_EQ(contextuality_verdict(c).classification, Classification::Noncontextual);
    }
}

TEST(Codes, MinusIdentityIsRejected) {
    EXPECT_THROW(code_from_gauge_generators(1, parse_pauli_list("Z,-Z", 1)), SignInconsistency);
    EXPECT_THROW(code_from_gauge_generators(2, parse_pauli_list("XX,ZZ,YY", 2)), SignInconsistency);
    // XX * ZZ = -YY, so listing -YY is consistent.
    EXPECT_EQ(code_from_gauge_generators(2, parse_pauli_list("XX,ZZ,-YY", 2)).s, 2u);
    EXPECT_THROW(code_from_gauge_generators(2, {}), InvalidArgument);
}

TEST(Codes, PresentationDoesNotChangeParameters) {
    std::mt19937_64 rng(71);
    SubsystemCode base = bacon_shor_3x3();
    for (int t = 0; t < 20; t++) {
        std::vector<PauliOperator> gens = base.gauge_generators;
        std::shuffle(gens.begin(), gens.end(), rng);
        for (int k = 0; k < 10; k++) {
            size_t i = rng() % gens.size(), j = rng() % gens.size();
            if (i != j) {
                gens[i] = mul(gens[i], gens[j]).hermitian_part();
            }
        }
        SubsystemCode c = code_from_gauge_generators(9, gens);
        EXPECT_EQ(c.s, base.s);
        EXPECT_EQ(c.g, base.g);
        EXPECT_EQ(c.k, base.k);
    }
}

// Random symplectic bases from Clifford conjugation of the standard one.
TEST(Codes, CheckGraphHasKirbyLoveExactlyWhenTwoGaugeQubits) {
    std::mt19937_64 rng(73);
    for (int t = 0; t < 150; t++) {
        size_t n = 2 + rng() % 5;
        auto word = random_clifford_word(n, 40, rng);
        std::vector<PauliOperator> xs, zs;
        for (size_t q = 0; q < n; q++) {
            PauliOperator x = PauliOperator::single(n, q, 'X'), z = PauliOperator::single(n, q, 'Z');
            for (const auto &g : word) {
                x = conjugate(g, x);
                z = conjugate(g, z);
            }
            xs.push_back(x);
            zs.push_back(z);
        }
        size_t s = rng() % (n + 1);
        size_t g = rng() % (n - s + 1);
        if (s + g == 0) {
            continue;
        }
        std::vector<PauliOperator> gens;
        for (size_t i = 0; i < s; i++) {
            gens.push_back(zs[i]);
        }
        for (size_t j = 0; j < g; j++) {
            gens.push_back(xs[s + j]);
            gens.push_back(zs[s + j]);
        }
        SubsystemCode c = code_from_gauge_generators(n, gens);
        ASSERT_EQ(c.s, s);
        ASSERT_EQ(c.g, g);
        bool kl = has_kirby_love(build_graph(check_measurements(c)));
        EXPECT_EQ(kl, g >= 2);
        EXPECT_EQ(contextuality_verdict(c).classification == Classification::StronglyContextualInPartialClosure,
                  g >= 2);
    }
}

BinaryMatrix random_self_orthogonal(size_t n, size_t target, std::mt19937_64 &rng) {
    BinaryMatrix w = BinaryMatrix::with_cols(n);
    for (int attempt = 0; attempt < 400 && w.num_rows() < target; attempt++) {
        BitVec v(n);
        for (size_t i = 0; i < n; i++) {
            v.set(i, rng() & 1);
        }
        if (v.popcount() % 2 || v.none()) {
            continue;
        }
        bool ok = true;
        for (const auto &r : w.rows()) {
            ok = ok && !r.dot(v);
        }
        if (ok && !row_space_contains(w, v)) {
            w.append_row(v);
        }
    }
    return w;
}

TEST(Css, BaseGaugeCountIdentity) {
    std::mt19937_64 rng(79);
    int done = 0;
    for (int t = 0; t < 200 && done < 60; t++) {
        size_t n = 7 + 2 * (rng() % 4);
        BinaryMatrix wc = random_self_orthogonal(n, rng() % (n / 2 + 1), rng);
        BinaryMatrix wt = BinaryMatrix::with_cols(n);
        for (const auto &r : wc.rows()) {
            if (rng() & 1) {
                wt.append_row(r);
            }
        }
        CssSubsystem css = css_subsystem_from_subspaces(wt, wc);
        done++;
        size_t expected = (n - 1) - rank(wc) - rank(wt);
        EXPECT_EQ(css.base.g, expected);
        EXPECT_EQ(oracle::gauge_count(css.base.gauge_generators), expected);
        EXPECT_EQ(rank(dotted_complement(wt)), (n - 1) - rank(wt));
        EXPECT_EQ(css.t_code.g, 0u);
        EXPECT_EQ(css.base.s, rank(wt) + rank(wc));
    }
    EXPECT_GE(done, 50);
}

TEST(Css, TrivialSubspacesGiveAllEvenWeightGauge) {
    BinaryMatrix zero = BinaryMatrix::with_cols(7);
    CssSubsystem css = css_subsystem_from_subspaces(zero, zero);
    EXPECT_EQ(css.base.g, 6u);
    EXPECT_EQ(css.base.s, 0u);
}

TEST(Css, RejectsInvalidChains) {
    BinaryMatrix even = BinaryMatrix::from_strings({"1100000"});
    BinaryMatrix odd = BinaryMatrix::from_strings({"1110000"});
    BinaryMatrix other = BinaryMatrix::from_strings({"0011000"});
    BinaryMatrix overlap = BinaryMatrix::from_strings({"1100000", "1010000"});
    EXPECT_THROW(css_subsystem_from_subspaces(BinaryMatrix::with_cols(6), BinaryMatrix::with_cols(6)),
                 InvalidArgument);
    EXPECT_THROW(css_subsystem_from_subspaces(odd, odd), InvalidArgument);
    EXPECT_THROW(css_subsystem_from_subspaces(even, other), InvalidArgument);
    EXPECT_THROW(css_subsystem_from_subspaces(BinaryMatrix::with_cols(7), overlap), InvalidArgument);
}

TEST(Css, DoubledColorCodeAtOneGivesThreeGaugeQubits) {
    // W_T from the 15-qubit Reed-Muller X stabilizers, W_C from the extended Steane X stabilizers.
    BinaryMatrix wt = BinaryMatrix::with_cols(15);
    for (Cell c : {Cell::R, Cell::G, Cell::B, Cell::Y}) {
        wt.append_row(BitVec::from_indices(15, cell_support(c)));
    }
    BinaryMatrix wc = BinaryMatrix::with_cols(15);
    for (Cell c : {Cell::R, Cell::G, Cell::B}) {
        wc.append_row(BitVec::from_indices(15, steane_face_support(c)));
    }
    for (const auto &f : yellow_faces()) {
        wc.append_row(BitVec::from_indices(15, f));
    }
    CssSubsystem css = css_subsystem_from_subspaces(wt, wc);
    EXPECT_EQ(css.dim_wt, 4u);
    EXPECT_EQ(css.dim_wc, 7u);
    EXPECT_EQ(css.base.g, 3u);
    EXPECT_EQ(css.base.s, 11u);
}

TEST(DoubledColor, ClosedFormsMatchLayerSums) {
    for (long long t = 1; t <= 8; t++) {
        long long sum_m = 0, sum_half = 0;
        for (long long j = 1; j <= t; j++) {
            long long m = 3 * j * j + 3 * j + 1;
            sum_m += m;
            sum_half += (m - 1) / 2;
        }
        long long n_basic = 1 + 2 * sum_m;
        long long dim_t = t + sum_half, dim_c = t + 2 * sum_half;
        long long g_basic = (n_basic - 1) - dim_t - dim_c;
        GaugeCount b = doubled_color_code_gauge_count(DoubledColorFamily::Basic, t);
        EXPECT_EQ(b.n, n_basic);
        EXPECT_EQ(b.g, g_basic);
        // Every qubit added by the later families is a gauge qubit.
        GaugeCount i = doubled_color_code_gauge_count(DoubledColorFamily::Intermediate, t);
        EXPECT_EQ(i.n, n_basic + t * t + t - 2);
        EXPECT_EQ(i.g, g_basic + t * t + t - 2);
        GaugeCount f = doubled_color_code_gauge_count(DoubledColorFamily::Final, t);
        EXPECT_EQ(f.n, i.n + t * t - t);
        EXPECT_EQ(f.g, i.g + t * t - t);
        for (auto gc : {b, i, f}) {
            EXPECT_GE(gc.g, 3);
        }
    }
}

TEST(DoubledColor, SpotValues) {
    EXPECT_EQ(doubled_color_code_gauge_count(DoubledColorFamily::Basic, 1).n, 15);
    EXPECT_EQ(doubled_color_code_gauge_count(DoubledColorFamily::Basic, 1).g, 3);
    EXPECT_EQ(doubled_color_code_gauge_count(DoubledColorFamily::Intermediate, 1).n, 15);
    EXPECT_EQ(doubled_color_code_gauge_count(DoubledColorFamily::Intermediate, 1).g, 3);
    GaugeCount f2 = doubled_color_code_gauge_count(DoubledColorFamily::Final, 2);
    EXPECT_EQ(f2.n, 59);
    EXPECT_EQ(f2.g, 18);
    EXPECT_THROW(doubled_color_code_gauge_count(DoubledColorFamily::Basic, 0), InvalidArgument);
}

}  // namespace
}  // namespace qcx
