// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#include "qcx/graph.h"

#include <algorithm>
#include <sstream>

#include "qcx/errors.h"

namespace qcx {

CompatibilityGraph::CompatibilityGraph(std::vector<BitVec> adjacency, std::vector<PauliOperator> labels)
    : adj_(std::move(adjacency)), labels_(std::move(labels)) {
    size_t n = adj_.size();
    if (!labels_.empty() && labels_.size() != n) {
        throw DimensionMismatch("label count does not match vertex count");
    }
    for (size_t i = 0; i < n; i++) {
        if (adj_[i].size() != n) {
            throw DimensionMismatch("adjacency row has wrong length");
        }
        if (adj_[i].get(i)) {
            throw InvalidArgument("adjacency has a self loop");
        }
        for (size_t j : adj_[i].set_indices()) {
            if (!adj_[j].get(i)) {
                throw InvalidArgument("adjacency is not symmetric");
            }
        }
    }
}

CompatibilityGraph CompatibilityGraph::induced(const std::vector<size_t> &vertices) const {
    std::vector<BitVec> adj(vertices.size(), BitVec(vertices.size()));
    std::vector<PauliOperator> labels;
    for (size_t i = 0; i < vertices.size(); i++) {
        for (size_t j = 0; j < vertices.size(); j++) {
            if (edge(vertices[i], vertices[j])) {
                adj[i].set(j, true);
            }
        }
        if (!labels_.empty()) {
            labels.push_back(labels_[vertices[i]]);
        }
    }
    return CompatibilityGraph(std::move(adj), std::move(labels));
}

CompatibilityGraph build_graph(const std::vector<PauliOperator> &ops) {
    size_t n = ops.size();
    std::vector<BitVec> adj(n, BitVec(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (commutes(ops[i], ops[j])) {
                adj[i].set(j, true);
                adj[j].set(i, true);
            }
        }
    }
    return CompatibilityGraph(std::move(adj), ops);
}

bool is_clique(const CompatibilityGraph &g, const BitVec &vertices) {
    auto vs = vertices.set_indices();
    for (size_t i : vs) {
        BitVec others = vertices;
        others.set(i, false);
        if ((others & g.neighbors(i)) != others) {
            return false;
        }
    }
    return true;
}

namespace {

// Non-adjacent pair inside the neighbourhood `nb`, if any.
std::optional<std::pair<size_t, size_t>> non_adjacent_pair(const CompatibilityGraph &g, const BitVec &nb) {
    for (size_t b : nb.set_indices()) {
        BitVec missing = nb;
        missing.set(b, false);
        missing ^= missing & g.neighbors(b);
        if (auto c = missing.first_set()) {
            return std::make_pair(b, *c);
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<KlWitness> kirby_love_witness(const CompatibilityGraph &g) {
    size_t n = g.size();
    for (size_t a = 0; a < n; a++) {
        BitVec non = BitVec::ones(n) ^ g.neighbors(a);
        non.set(a, false);
        auto d = non.first_set();
        if (!d) {
            continue;
        }
        if (auto bc = non_adjacent_pair(g, g.neighbors(a))) {
            return KlWitness{a, bc->first, bc->second, *d};
        }
    }
    return std::nullopt;
}

bool has_kirby_love(const CompatibilityGraph &g) {
    return kirby_love_witness(g).has_value();
}

std::vector<size_t> universal_vertices(const CompatibilityGraph &g) {
    std::vector<size_t> out;
    for (size_t v = 0; v < g.size(); v++) {
        if (g.neighbors(v).popcount() + 1 == g.size()) {
            out.push_back(v);
        }
    }
    return out;
}

bool has_kirby_love_structural(const CompatibilityGraph &g) {
    BitVec rest = BitVec::ones(g.size());
    for (size_t u : universal_vertices(g)) {
        rest.set(u, false);
    }
    for (size_t v : rest.set_indices()) {
        if (non_adjacent_pair(g, g.neighbors(v) & rest)) {
            return true;
        }
    }
    return false;
}

namespace {

struct CliqueSearch {
    const CompatibilityGraph &g;
    size_t cap;
    std::vector<std::vector<size_t>> found;

    void run(BitVec r, BitVec p, BitVec x) {
        if (p.none() && x.none()) {
            if (found.size() >= cap) {
                throw CapExceeded("maximal clique enumeration exceeded " + std::to_string(cap) + " cliques");
            }
            found.push_back(r.set_indices());
            return;
        }
        size_t pivot = 0;
        size_t best = 0;
        bool have = false;
        for (size_t u : (p | x).set_indices()) {
            size_t deg = (p & g.neighbors(u)).popcount();
            if (!have || deg > best) {
                pivot = u;
                best = deg;
                have = true;
            }
        }
        BitVec candidates = p ^ (p & g.neighbors(pivot));
        for (size_t v : candidates.set_indices()) {
            BitVec r2 = r;
            r2.set(v, true);
            run(r2, p & g.neighbors(v), x & g.neighbors(v));
            p.set(v, false);
            x.set(v, true);
        }
    }
};

}  // namespace

std::vector<std::vector<size_t>> maximal_cliques(const CompatibilityGraph &g, size_t max_cliques) {
    size_t n = g.size();
    if (n == 0) {
        return {};
    }
    CliqueSearch search{g, max_cliques, {}};
    search.run(BitVec(n), BitVec::ones(n), BitVec(n));
    std::sort(search.found.begin(), search.found.end());
    return search.found;
}

std::string graph_to_dot(const CompatibilityGraph &g, const std::optional<KlWitness> &highlight) {
    std::ostringstream out;
    out << "graph compatibility {\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (size_t v = 0; v < g.size(); v++) {
        std::string label = g.labels().empty() ? std::to_string(v) : format_pauli(g.labels()[v], PauliStyle::Sparse);
        out << "  v" << v << " [label=\"" << label << "\"";
        if (highlight) {
            const char *role = nullptr;
            if (v == highlight->a) {
                role = "a";
            } else if (v == highlight->b) {
                role = "b";
            } else if (v == highlight->c) {
                role = "c";
            } else if (v == highlight->d) {
                role = "d";
            }
            if (role) {
                out << ", color=red, xlabel=\"" << role << "\"";
            }
        }
        out << "];\n";
    }
    for (size_t i = 0; i < g.size(); i++) {
        for (size_t j = i + 1; j < g.size(); j++) {
            if (g.edge(i, j)) {
                out << "  v" << i << " -- v" << j << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace qcx
