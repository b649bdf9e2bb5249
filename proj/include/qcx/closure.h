// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_CLOSURE_H
#define QCX_CLOSURE_H

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcx/f2.h"
#include "qcx/pauli.h"

namespace qcx {

/// Rooted tree in which every internal node is the product of its pairwise
/// commuting children.
struct DeterminingTree {
    PauliOperator node;
    std::vector<DeterminingTree> children;

    bool is_leaf() const {
        return children.empty();
    }
    size_t size() const;
};

/// Empty string when the tree is valid over `base`, else a description of the
/// first defect found. An empty base skips the leaf-membership check.
std::string validate_tree(const DeterminingTree &t, const std::vector<PauliOperator> &base);
/// Leaf multiplicities, keyed by operator.
std::map<PauliOperator, size_t> leaf_counts(const DeterminingTree &t);
/// Leaves occurring an odd number of times, sorted.
std::vector<PauliOperator> determining_set(const DeterminingTree &t);
std::string tree_to_dot(const DeterminingTree &t);

/// How an element entered the closure: a base leaf, or the product of two
/// earlier elements (indices into ClosureSet::elements).
struct Derivation {
    static constexpr size_t kLeaf = static_cast<size_t>(-1);
    size_t left = kLeaf;
    size_t right = kLeaf;

    bool is_leaf() const {
        return left == kLeaf;
    }
};

class ClosureSet {
   public:
    size_t n = 0;
    std::vector<PauliOperator> base;      // sorted, deduplicated
    std::vector<PauliOperator> elements;  // sorted
    std::vector<Derivation> derivations;  // aligned with elements

    std::optional<size_t> index_of(const PauliOperator &p) const;
    bool contains(const PauliOperator &p) const {
        return index_of(p).has_value();
    }
    /// Provenance tree of elements[i], with leaves in base.
    DeterminingTree provenance(size_t i) const;

   private:
    friend ClosureSet partial_closure(const std::vector<PauliOperator> &, size_t);
    std::unordered_map<PauliOperator, size_t, PauliHash> index_;
};

/// Default cap 2 * 4^n, the size of the real-phase Pauli set.
size_t default_closure_cap(size_t n);

/// Fixpoint of adding commuting products of pairs. cap = 0 means the default.
ClosureSet partial_closure(const std::vector<PauliOperator> &s, size_t cap = 0);
bool is_partial_subgroup(const std::vector<PauliOperator> &s);

struct LinearEquation {
    size_t context;
    BitVec a;  // over LinearTheory::variables
    bool b;
};

/// Parity equations holding between commuting elements of a closure.
struct LinearTheory {
    std::vector<PauliOperator> variables;
    std::vector<std::vector<size_t>> contexts;
    std::vector<LinearEquation> equations;

    BinaryMatrix matrix() const;
    BitVec rhs() const;
};

struct LinearTheoryOptions {
    /// Enumerate every dependency of a context when its dependency space has
    /// dimension at most this; otherwise emit a basis only.
    size_t full_enumeration_dim = 12;
    size_t max_cliques = 1000000;
};

LinearTheory linear_theory(const ClosureSet &c, const LinearTheoryOptions &opts = {});

struct SiAvnResult {
    bool contextual = false;
    /// y with y^T A = 0 and y.b = 1, indexed by equation.
    std::optional<BitVec> certificate;
    LinearTheory theory;
};

SiAvnResult si_avn(const ClosureSet &c, const LinearTheoryOptions &opts = {});

/// Values (+1/-1) aligned with c.elements, or nullopt under Kochen-Specker contextuality.
std::optional<std::vector<int>> ks_value_assignment(const ClosureSet &c);
/// Same question decided by backtracking over values, without linear algebra.
std::optional<std::vector<int>> ks_value_assignment_search(const ClosureSet &c);
/// True iff lambda(pq) = lambda(p) lambda(q) for commuting p, q and lambda(-I) = -1.
bool is_ks_assignment(const ClosureSet &c, const std::vector<int> &values);

/// A tree of -I over c.base in which every leaf occurs an even number of times.
std::optional<DeterminingTree> determining_tree_witness(const ClosureSet &c);

}  // namespace qcx

#endif
