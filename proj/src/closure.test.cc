// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/closure.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.h"
#include "qcx/errors.h"

namespace qcx {
namespace {

std::vector<PauliOperator> square() {
    return parse_pauli_list("X0,X1,Z0,Z1", 2);
}

DeterminingTree leaf(const std::string &s) {
    return {parse_pauli(s, 2), {}};
}

DeterminingTree node(const std::string &s, std::vector<DeterminingTree> kids) {
    return {parse_pauli(s, 2), std::move(kids)};
}

TEST(Closure, TwoQubitSquareHasTwentyElements) {
    ClosureSet c = partial_closure(square());
    std::set<PauliOperator> expected;
    for (const char *s : {"II", "XI", "IX", "ZI", "IZ", "XX", "ZX", "ZZ", "XZ", "YY"}) {
        PauliOperator p = parse_pauli(s, 2);
        expected.insert(p);
        expected.insert(p.negated());
    }
    EXPECT_EQ(c.elements.size(), 20u);
    EXPECT_EQ(std::set<PauliOperator>(c.elements.begin(), c.elements.end()), expected);
    EXPECT_TRUE(is_partial_subgroup(c.elements));
    EXPECT_FALSE(is_partial_subgroup(square()));
}

TEST(Closure, SingleOperator) {
    ClosureSet c = partial_closure(parse_pauli_list("X0", 1));
    EXPECT_EQ(c.elements.size(), 2u);
    EXPECT_TRUE(c.contains(PauliOperator::identity(1)));
}

TEST(Closure, ElementsAreSortedAndProvenanceIsValid) {
    ClosureSet c = partial_closure(square());
    EXPECT_TRUE(std::is_sorted(c.elements.begin(), c.elements.end()));
    for (size_t i = 0; i < c.elements.size(); i++) {
        DeterminingTree t = c.provenance(i);
        EXPECT_EQ(t.node, c.elements[i]);
        EXPECT_EQ(validate_tree(t, c.base), "") << format_pauli(c.elements[i]);
    }
}

TEST(Closure, AgreesWithDenseFixpoint) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; t++) {
        size_t n = 1 + rng() % 2;
        std::vector<PauliOperator> base;
        size_t m = 1 + rng() % 4;
        for (size_t i = 0; i < m; i++) {
            base.push_back(oracle::random_pauli(n, rng));
        }
        ClosureSet c = partial_closure(base);
        std::set<PauliOperator> got(c.elements.begin(), c.elements.end());
        EXPECT_EQ(got, oracle::dense_closure(base));
    }
}

TEST(Closure, CapIsEnforced) {
    EXPECT_THROW(partial_closure(square(), 10), CapExceeded);
    EXPECT_EQ(default_closure_cap(2), 32u);
}

TEST(DeterminingTrees, PlusAndMinusYYShareTheirDeterminingSet) {
    DeterminingTree plus = node("YY", {node("XZ", {leaf("XI"), leaf("IZ")}), node("ZX", {leaf("ZI"), leaf("IX")})});
    DeterminingTree minus = node("-YY", {node("XX", {leaf("XI"), leaf("IX")}), node("ZZ", {leaf("ZI"), leaf("IZ")})});
    EXPECT_EQ(validate_tree(plus, square()), "");
    EXPECT_EQ(validate_tree(minus, square()), "");
    EXPECT_EQ(determining_set(plus), determining_set(minus));
    std::vector<PauliOperator> sorted = square();
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(determining_set(plus), sorted);
}

TEST(DeterminingTrees, ValidatorRejectsBadTrees) {
    // Wrong product.
    EXPECT_NE(validate_tree(node("YY", {leaf("XI"), leaf("IX")}), square()), "");
    // Anticommuting children.
    EXPECT_NE(validate_tree(node("YI", {leaf("XI"), leaf("ZI")}), square()), "");
    // Leaf outside the base.
    EXPECT_NE(validate_tree(node("YY", {leaf("YI"), leaf("IY")}), square()), "");
}

TEST(DeterminingTrees, WitnessForSquare) {
    ClosureSet c = partial_closure(square());
    auto t = determining_tree_witness(c);
    ASSERT_TRUE(t.has_value());
    EXPECT_TRUE(t->node.is_minus_identity());
    EXPECT_EQ(validate_tree(*t, c.base), "");
    EXPECT_TRUE(determining_set(*t).empty());
    EXPECT_NE(tree_to_dot(*t).find("digraph"), std::string::npos);
}

TEST(DeterminingTrees, NoWitnessForCommutingSet) {
    ClosureSet c = partial_closure(parse_pauli_list("X0,X1", 2));
    EXPECT_FALSE(determining_tree_witness(c).has_value());
}

TEST(LinearTheory, CertificateRefutesTheSystem) {
    ClosureSet c = partial_closure(square());
    SiAvnResult r = si_avn(c);
    ASSERT_TRUE(r.contextual);
    ASSERT_TRUE(r.certificate.has_value());
    BinaryMatrix a = r.theory.matrix();
    BitVec b = r.theory.rhs();
    BitVec sum(a.num_cols());
    for (size_t i : r.certificate->set_indices()) {
        sum ^= a.row(i);
    }
    EXPECT_TRUE(sum.none());
    EXPECT_TRUE(r.certificate->dot(b));
}

TEST(LinearTheory, EquationsHoldForOperatorProducts) {
    ClosureSet c = partial_closure(parse_pauli_list("X0,X1,Z0,Z1,Y0", 2));
    LinearTheory th = linear_theory(c);
    for (const auto &eq : th.equations) {
        GroupElement prod = GroupElement::identity(2);
        for (size_t v : eq.a.set_indices()) {
            prod = mul(prod, GroupElement::from_pauli(th.variables[v]));
        }
        ASSERT_TRUE(prod.is_real());
        PauliOperator p = prod.to_pauli();
        EXPECT_TRUE(p.x.none() && p.z.none());
        EXPECT_EQ(p.negative, eq.b);
    }
}

// Exhaustive search over +-1 values for small closures.
std::optional<std::vector<int>> brute_force_ks(const ClosureSet &c) {
    size_t m = c.elements.size();
    for (uint64_t s = 0; s < (uint64_t{1} << m); s++) {
        std::vector<int> v(m);
        for (size_t i = 0; i < m; i++) {
            v[i] = (s >> i & 1) ? -1 : 1;
        }
        if (is_ks_assignment(c, v)) {
            return v;
        }
    }
    return std::nullopt;
}

TEST(KochenSpecker, DecidersAgreeWithExhaustiveSearch) {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int t = 0; t < 300 && checked < 60; t++) {
        size_t n = 1 + rng() % 2;
        std::vector<PauliOperator> base;
        size_t m = 1 + rng() % 3;
        for (size_t i = 0; i < m; i++) {
            base.push_back(oracle::random_pauli(n, rng));
        }
        ClosureSet c = partial_closure(base);
        if (c.elements.size() > 16) {
            continue;
        }
        checked++;
        bool exists = brute_force_ks(c).has_value();
        auto lin = ks_value_assignment(c);
        auto search = ks_value_assignment_search(c);
        EXPECT_EQ(lin.has_value(), exists);
        EXPECT_EQ(search.has_value(), exists);
        if (lin) {
            EXPECT_TRUE(is_ks_assignment(c, *lin));
        }
        if (search) {
            EXPECT_TRUE(is_ks_assignment(c, *search));
        }
        EXPECT_EQ(si_avn(c).contextual, !exists);
    }
    EXPECT_GE(checked, 20);
}

TEST(KochenSpecker, SquareHasNoValueAssignment) {
    ClosureSet c = partial_closure(square());
    EXPECT_FALSE(ks_value_assignment(c).has_value());
    EXPECT_FALSE(ks_value_assignment_search(c).has_value());
}

}  // namespace
}  // namespace qcx
