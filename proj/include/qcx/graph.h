// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_GRAPH_H
#define QCX_GRAPH_H

#include <optional>
#include <string>
#include <vector>

#include "qcx/bitvec.h"
#include "qcx/pauli.h"

namespace qcx {

/// Simple undirected graph; vertices optionally labelled by Pauli operators,
/// in which case edges join distinct commuting operators.
class CompatibilityGraph {
   public:
    CompatibilityGraph() = default;
    /// Adjacency must be symmetric with zero diagonal.
    explicit CompatibilityGraph(std::vector<BitVec> adjacency, std::vector<PauliOperator> labels = {});

    size_t size() const {
        return adj_.size();
    }
    bool edge(size_t i, size_t j) const {
        return adj_[i].get(j);
    }
    const BitVec &neighbors(size_t i) const {
        return adj_[i];
    }
    const std::vector<PauliOperator> &labels() const {
        return labels_;
    }
    CompatibilityGraph induced(const std::vector<size_t> &vertices) const;

   private:
    std::vector<BitVec> adj_;
    std::vector<PauliOperator> labels_;
};

CompatibilityGraph build_graph(const std::vector<PauliOperator> &ops);

/// Vertices with edges a-b, a-c and non-edges a-d, b-c.
struct KlWitness {
    size_t a, b, c, d;
};

std::optional<KlWitness> kirby_love_witness(const CompatibilityGraph &g);
bool has_kirby_love(const CompatibilityGraph &g);
/// Removes universal vertices, then asks whether some remaining vertex has a
/// neighbourhood (inside the remainder) that is not a clique.
bool has_kirby_love_structural(const CompatibilityGraph &g);
std::vector<size_t> universal_vertices(const CompatibilityGraph &g);
bool is_clique(const CompatibilityGraph &g, const BitVec &vertices);

/// All maximal cliques (Bron-Kerbosch, Tomita pivot), each sorted, list sorted
/// lexicographically. Throws CapExceeded past max_cliques.
std::vector<std::vector<size_t>> maximal_cliques(const CompatibilityGraph &g, size_t max_cliques = 1000000);

std::string graph_to_dot(const CompatibilityGraph &g, const std::optional<KlWitness> &highlight = std::nullopt);

}  // namespace qcx

#endif
