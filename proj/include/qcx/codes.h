// Copyright 2026 The qcx Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef QCX_CODES_H
#define QCX_CODES_H

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcx/f2.h"
#include "qcx/pauli.h"

namespace qcx {

/// A subsystem stabilizer code given by generators of its gauge group.
/// Everything besides the generators is derived at construction.
struct SubsystemCode {
    std::string name;
    size_t n = 0;
    std::vector<PauliOperator> gauge_generators;
    std::vector<PauliOperator> stabilizer_basis;
    /// g hyperbolic pairs (X', Z') spanning the gauge group modulo stabilizers.
    std::vector<std::pair<PauliOperator, PauliOperator>> canonical_pairs;
    size_t s = 0;
    size_t g = 0;
    size_t k = 0;
    size_t rank = 0;  // rank of the gauge generators' symplectic rows, s + 2g
};

SubsystemCode code_from_gauge_generators(size_t n, const std::vector<PauliOperator> &gens, std::string name = "");

/// Stabilizer basis followed by the canonical pairs, X'_1, Z'_1, X'_2, Z'_2, ...
std::vector<PauliOperator> check_measurements(const SubsystemCode &c);

enum class Classification { Noncontextual, StronglyContextualInPartialClosure };

std::string to_string(Classification c);

struct Verdict {
    Classification classification = Classification::Noncontextual;
    size_t g = 0;
    /// (X'_1, X'_2, Z'_2, Z'_1) when g >= 2, in Kirby-Love order (a, b, c, d).
    std::optional<std::array<PauliOperator, 4>> kl_witness;
};

Verdict contextuality_verdict(const SubsystemCode &c);

/// Even-weight vectors orthogonal to every row of w.
BinaryMatrix dotted_complement(const BinaryMatrix &w);

/// Rows are X(a) for a in a basis of rowspace(xs) followed by Z(b) for rowspace(zs).
std::vector<PauliOperator> css_generators(const BinaryMatrix &xs, const BinaryMatrix &zs);

struct CssSubsystem {
    SubsystemCode base;    // gauge CSS(dotW_C, dotW_T), stabilizer CSS(W_T, W_C)
    SubsystemCode t_code;  // stabilizer CSS(W_T, dotW_T)
    SubsystemCode c_code;  // stabilizer CSS(W_C, W_C), gauge CSS(dotW_C, dotW_C)
    size_t dim_wt = 0;
    size_t dim_wc = 0;
};

/// Requires n odd, even-weight rows, W_T within W_C and W_C self-orthogonal.
CssSubsystem css_subsystem_from_subspaces(const BinaryMatrix &w_t, const BinaryMatrix &w_c);

enum class DoubledColorFamily { Basic, Intermediate, Final };

struct GaugeCount {
    long long n = 0;
    long long g = 0;
};

GaugeCount doubled_color_code_gauge_count(DoubledColorFamily family, long long t);

}  // namespace qcx

#endif
