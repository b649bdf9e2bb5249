// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/closure.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "qcx/errors.h"
#include "qcx/graph.h"

namespace qcx {

size_t DeterminingTree::size() const {
    size_t total = 1;
    for (const auto &c : children) {
        total += c.size();
    }
    return total;
}

std::string validate_tree(const DeterminingTree &t, const std::vector<PauliOperator> &base) {
    if (t.is_leaf()) {
        if (!base.empty() && std::find(base.begin(), base.end(), t.node) == base.end()) {
            return "leaf " + format_pauli(t.node) + " is not in the base set";
        }
        return "";
    }
    size_t n = t.node.num_qubits();
    GroupElement product = GroupElement::identity(n);
    for (size_t i = 0; i < t.children.size(); i++) {
        for (size_t j = i + 1; j < t.children.size(); j++) {
            if (!commutes(t.children[i].node, t.children[j].node)) {
                return "children " + format_pauli(t.children[i].node) + " and " +
                       format_pauli(t.children[j].node) + " anticommute";
            }
        }
        product = mul(product, GroupElement::from_pauli(t.children[i].node));
    }
    if (!product.is_real() || product.to_pauli() != t.node) {
        return "node " + format_pauli(t.node) + " is not the product of its children";
    }
    for (const auto &c : t.children) {
        std::string err = validate_tree(c, base);
        if (!err.empty()) {
            return err;
        }
    }
    return "";
}

std::map<PauliOperator, size_t> leaf_counts(const DeterminingTree &t) {
    std::map<PauliOperator, size_t> counts;
    std::function<void(const DeterminingTree &)> walk = [&](const DeterminingTree &u) {
        if (u.is_leaf()) {
            counts[u.node]++;
            return;
        }
        for (const auto &c : u.children) {
            walk(c);
        }
    };
    walk(t);
    return counts;
}

std::vector<PauliOperator> determining_set(const DeterminingTree &t) {
    std::vector<PauliOperator> out;
    for (const auto &[p, k] : leaf_counts(t)) {
        if (k % 2) {
            out.push_back(p);
        }
    }
    return out;
}

std::string tree_to_dot(const DeterminingTree &t) {
    std::ostringstream out;
    out << "digraph determining_tree {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    size_t counter = 0;
    std::function<size_t(const DeterminingTree &)> emit = [&](const DeterminingTree &u) {
        size_t id = counter++;
        out << "  t" << id << " [label=\"" << format_pauli(u.node, PauliStyle::Sparse) << "\"";
        if (u.is_leaf()) {
            out << ", style=filled, fillcolor=lightgrey";
        }
        out << "];\n";
        for (const auto &c : u.children) {
            size_t child = emit(c);
            out << "  t" << id << " -> t" << child << ";\n";
        }
        return id;
    };
    emit(t);
    out << "}\n";
    return out.str();
}

std::optional<size_t> ClosureSet::index_of(const PauliOperator &p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

DeterminingTree ClosureSet::provenance(size_t i) const {
    const Derivation &d = derivations[i];
    if (d.is_leaf()) {
        return DeterminingTree{elements[i], {}};
    }
    return DeterminingTree{elements[i], {provenance(d.left), provenance(d.right)}};
}

size_t default_closure_cap(size_t n) {
    if (n > 30) {
        return static_cast<size_t>(-1);
    }
    return size_t{2} << (2 * n);
}

ClosureSet partial_closure(const std::vector<PauliOperator> &s, size_t cap) {
    if (s.empty()) {
        throw InvalidArgument("partial closure of an empty set");
    }
    size_t n = s[0].num_qubits();
    for (const auto &p : s) {
        if (p.num_qubits() != n) {
            throw DimensionMismatch("operators act on different numbers of qubits");
        }
    }
    if (cap == 0) {
        cap = default_closure_cap(n);
    }
    std::vector<PauliOperator> base = s;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    if (base.size() > cap) {
        throw CapExceeded("closure cap " + std::to_string(cap) + " is smaller than the input set");
    }

    std::vector<PauliOperator> found = base;
    std::vector<Derivation> found_der(base.size());
    std::unordered_map<PauliOperator, size_t, PauliHash> seen;
    for (size_t i = 0; i < found.size(); i++) {
        seen.emplace(found[i], i);
    }
    for (size_t i = 0; i < found.size(); i++) {
        for (size_t j = 0; j <= i; j++) {
            if (!commutes(found[i], found[j])) {
                continue;
            }
            PauliOperator prod = commuting_product(found[i], found[j]);
            if (seen.count(prod)) {
                continue;
            }
            if (found.size() + 1 > cap) {
                throw CapExceeded("partial closure exceeded cap " + std::to_string(cap));
            }
            seen.emplace(prod, found.size());
            found.push_back(std::move(prod));
            found_der.push_back(Derivation{i, j});
        }
    }

    std::vector<size_t> order(found.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return found[a] < found[b]; });
    std::vector<size_t> rank_of(found.size());
    for (size_t k = 0; k < order.size(); k++) {
        rank_of[order[k]] = k;
    }

    ClosureSet out;
    out.n = n;
    out.base = base;
    for (size_t k = 0; k < order.size(); k++) {
        out.elements.push_back(found[order[k]]);
        Derivation d = found_der[order[k]];
        if (!d.is_leaf()) {
            d.left = rank_of[d.left];
            d.right = rank_of[d.right];
        }
        out.derivations.push_back(d);
        out.index_.emplace(out.elements.back(), k);
    }
    return out;
}

bool is_partial_subgroup(const std::vector<PauliOperator> &s) {
    if (s.empty()) {
        return false;
    }
    std::unordered_set<PauliOperator, PauliHash> set(s.begin(), s.end());
    if (!set.count(PauliOperator::identity(s[0].num_qubits()))) {
        return false;
    }
    for (const auto &p : s) {
        for (const auto &q : s) {
            if (commutes(p, q) && !set.count(commuting_product(p, q))) {
                return false;
            }
        }
    }
    return true;
}

BinaryMatrix LinearTheory::matrix() const {
    BinaryMatrix m = BinaryMatrix::with_cols(variables.size());
    for (const auto &e : equations) {
        m.append_row(e.a);
    }
    return m;
}

BitVec LinearTheory::rhs() const {
    BitVec b(equations.size());
    for (size_t i = 0; i < equations.size(); i++) {
        b.set(i, equations[i].b);
    }
    return b;
}

LinearTheory linear_theory(const ClosureSet &c, const LinearTheoryOptions &opts) {
    LinearTheory t;
    t.variables = c.elements;
    t.contexts = maximal_cliques(build_graph(c.elements), opts.max_cliques);
    size_t nv = t.variables.size();
    std::unordered_set<BitVec, BitVecHash> emitted;

    for (size_t k = 0; k < t.contexts.size(); k++) {
        const auto &ctx = t.contexts[k];
        std::vector<PauliOperator> ops;
        for (size_t v : ctx) {
            ops.push_back(c.elements[v]);
        }
        std::vector<BitVec> deps = nullspace(symplectic_matrix(ops, c.n).transposed());

        auto emit = [&](const BitVec &local) {
            BitVec a(nv);
            GroupElement prod = GroupElement::identity(c.n);
            for (size_t i : local.set_indices()) {
                a.set(ctx[i], true);
                prod = mul(prod, GroupElement::from_pauli(ops[i]));
            }
            if (!emitted.insert(a).second) {
                return;
            }
            // A product of commuting observables with zero symplectic part is +I or -I.
            PauliOperator value = prod.to_pauli();
            t.equations.push_back(LinearEquation{k, a, value.negative});
        };

        if (deps.size() <= opts.full_enumeration_dim) {
            // Walk the whole dependency space in Gray-code order.
            BitVec local(ctx.size());
            for (uint64_t step = 1; step < (uint64_t{1} << deps.size()); step++) {
                local ^= deps[static_cast<size_t>(std::countr_zero(step))];
                emit(local);
            }
        } else {
            for (const auto &d : deps) {
                emit(d);
            }
        }
    }
    return t;
}

SiAvnResult si_avn(const ClosureSet &c, const LinearTheoryOptions &opts) {
    SiAvnResult r;
    r.theory = linear_theory(c, opts);
    BinaryMatrix a = r.theory.matrix();
    BitVec b = r.theory.rhs();
    if (solve(a, b)) {
        return r;
    }
    r.contextual = true;
    // Some null vector of A^T pairs to 1 with b, otherwise b would lie in the column space.
    std::optional<BitVec> best;
    for (const auto &y : nullspace(a.transposed())) {
        if (y.dot(b) && (!best || y.popcount() < best->popcount())) {
            best = y;
        }
    }
    r.certificate = best;
    return r;
}

std::optional<std::vector<int>> ks_value_assignment(const ClosureSet &c) {
    LinearTheory t = linear_theory(c);
    auto s = solve(t.matrix(), t.rhs());
    if (!s) {
        return std::nullopt;
    }
    std::vector<int> values(c.elements.size());
    for (size_t i = 0; i < values.size(); i++) {
        values[i] = s->get(i) ? -1 : 1;
    }
    return values;
}

namespace {

struct Triple {
    size_t p, q, pq;
};

std::vector<Triple> product_triples(const ClosureSet &c) {
    std::vector<Triple> out;
    for (size_t i = 0; i < c.elements.size(); i++) {
        for (size_t j = i; j < c.elements.size(); j++) {
            if (commutes(c.elements[i], c.elements[j])) {
                auto k = c.index_of(commuting_product(c.elements[i], c.elements[j]));
                if (!k) {
                    throw InvalidArgument("set is not closed under commuting products");
                }
                out.push_back(Triple{i, j, *k});
            }
        }
    }
    return out;
}

}  // namespace

bool is_ks_assignment(const ClosureSet &c, const std::vector<int> &values) {
    if (values.size() != c.elements.size()) {
        return false;
    }
    for (const auto &t : product_triples(c)) {
        if (values[t.pq] != values[t.p] * values[t.q]) {
            return false;
        }
    }
    if (auto m = c.index_of(PauliOperator::minus_identity(c.n))) {
        if (values[*m] != -1) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<int>> ks_value_assignment_search(const ClosureSet &c) {
    size_t nv = c.elements.size();
    std::vector<Triple> triples = product_triples(c);
    std::vector<std::vector<size_t>> touching(nv);
    for (size_t k = 0; k < triples.size(); k++) {
        touching[triples[k].p].push_back(k);
        touching[triples[k].q].push_back(k);
        touching[triples[k].pq].push_back(k);
    }
    std::vector<int> val(nv, 0);
    std::vector<size_t> trail;

    // Assign v := x and propagate forced values; false on conflict.
    auto assign = [&](size_t v, int x) {
        std::vector<std::pair<size_t, int>> queue{{v, x}};
        while (!queue.empty()) {
            auto [u, y] = queue.back();
            queue.pop_back();
            if (val[u] != 0) {
                if (val[u] != y) {
                    return false;
                }
                continue;
            }
            val[u] = y;
            trail.push_back(u);
            for (size_t k : touching[u]) {
                const Triple &t = triples[k];
                int a = val[t.p], b = val[t.q], ab = val[t.pq];
                int unknown = (a == 0) + (b == 0) + (ab == 0);
                if (t.p == t.q) {
                    // p*p = I: lambda(I) = 1 regardless of p.
                    if (ab == 0) {
                        queue.push_back({t.pq, 1});
                    } else if (ab != 1) {
                        return false;
                    }
                    continue;
                }
                if (unknown == 0) {
                    if (ab != a * b) {
                        return false;
                    }
                } else if (unknown == 1) {
                    if (a == 0) {
                        queue.push_back({t.p, ab * b});
                    } else if (b == 0) {
                        queue.push_back({t.q, ab * a});
                    } else {
                        queue.push_back({t.pq, a * b});
                    }
                }
            }
        }
        return true;
    };
    auto undo_to = [&](size_t mark) {
        while (trail.size() > mark) {
            val[trail.back()] = 0;
            trail.pop_back();
        }
    };

    if (auto m = c.index_of(PauliOperator::minus_identity(c.n))) {
        if (!assign(*m, -1)) {
            return std::nullopt;
        }
    }
    std::function<bool(size_t)> dfs = [&](size_t from) -> bool {
        size_t v = from;
        while (v < nv && val[v] != 0) {
            v++;
        }
        if (v == nv) {
            return true;
        }
        for (int x : {1, -1}) {
            size_t mark = trail.size();
            if (assign(v, x) && dfs(v + 1)) {
                return true;
            }
            undo_to(mark);
        }
        return false;
    };
    if (!dfs(0)) {
        return std::nullopt;
    }
    return val;
}

std::optional<DeterminingTree> determining_tree_witness(const ClosureSet &c) {
    SiAvnResult r = si_avn(c);
    if (!r.contextual || !r.certificate) {
        return std::nullopt;
    }
    DeterminingTree root{PauliOperator::minus_identity(c.n), {}};
    for (size_t i : r.certificate->set_indices()) {
        const LinearEquation &e = r.theory.equations[i];
        DeterminingTree mid{r.theory.equations[i].b ? PauliOperator::minus_identity(c.n) : PauliOperator::identity(c.n), {}};
        for (size_t j : e.a.set_indices()) {
            mid.children.push_back(c.provenance(j));
        }
        root.children.push_back(std::move(mid));
    }
    return root;
}

}  // namespace qcx
